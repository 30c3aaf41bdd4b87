"""Bridge count, warping degree, ascending number and subdiagram genus search."""
from __future__ import annotations

import itertools
from typing import NamedTuple

from ._parallel import pmap, worker_count
from .carter import flat_faces
from .gauss import Diagram, change_crossings, subdiagram

__all__ = [
    "CapExceededError",
    "AscendingContext",
    "bridge_count",
    "warping_degree",
    "ascending_number",
    "ascending_contexts",
    "is_ascending",
    "ascending_number_oracle",
    "MinSubdiagram",
    "min_genus_subdiagram",
    "fast_genus",
]

SUBDIAGRAM_CAP = 20
ORACLE_CAP = 8


class CapExceededError(ValueError):
    """An exhaustive search was asked to exceed its configured limit."""


def bridge_count(d: Diagram) -> int:
    total = 0
    for comp in d.components:
        n = len(comp)
        runs = sum(1 for i in range(n) if comp[i].over and not comp[i - 1].over)
        if n and all(e.over for e in comp):
            runs = 1
        total += max(1, runs)
    return total


class AscendingContext(NamedTuple):
    order: tuple[int, ...]
    basepoints: tuple[int, ...]  # indexed by component, not by position in ``order``

    def validate(self, d: Diagram) -> None:
        if sorted(self.order) != list(range(d.n_components)):
            raise ValueError(f"order {self.order} is not a permutation of the components")
        if len(self.basepoints) != d.n_components:
            raise ValueError("need one basepoint per component")
        for k, b in enumerate(self.basepoints):
            if not 0 <= b < max(1, len(d.components[k])):
                raise ValueError(f"basepoint {b} out of range for component {k}")


def warping_degree(d: Diagram, ctx: AscendingContext) -> int:
    """Crossings whose first passage, in the context's traversal, is Over."""
    ctx.validate(d)
    seen: set[int] = set()
    count = 0
    for k in ctx.order:
        comp = d.components[k]
        b = ctx.basepoints[k]
        for e in comp[b:] + comp[:b]:
            if e.crossing not in seen:
                seen.add(e.crossing)
                count += e.over
    return count


def ascending_contexts(d: Diagram):
    ranges = [range(max(1, len(c))) for c in d.components]
    for order in itertools.permutations(range(d.n_components)):
        for bases in itertools.product(*ranges):
            yield AscendingContext(order, bases)


def ascending_number(d: Diagram) -> int:
    return min(warping_degree(d, ctx) for ctx in ascending_contexts(d))


def is_ascending(d: Diagram) -> bool:
    return any(warping_degree(d, ctx) == 0 for ctx in ascending_contexts(d))


def ascending_number_oracle(d: Diagram, cap: int = ORACLE_CAP) -> int:
    """Fewest crossing changes after which some context is ascending.

    Brute force over crossing subsets in order of size.
    """
    if d.n_crossings > cap:
        raise CapExceededError(f"{d.n_crossings} crossings exceeds the oracle cap {cap}")
    cs = d.crossings
    for size in range(len(cs) + 1):
        for sub in itertools.combinations(cs, size):
            if is_ascending(change_crossings(d, sub)):
                return size
    raise AssertionError("changing every crossing must reach an ascending diagram")


def fast_genus(d: Diagram) -> int:
    """Total Carter genus from an integer face count."""
    classes = _n_classes(d)
    v = d.n_crossings
    e = sum(len(c) for c in d.components)
    f = len(flat_faces(d)) + 2 * sum(1 for c in d.components if not c)
    return (2 * classes - (v - e + f)) // 2


def _n_classes(d: Diagram) -> int:
    parent = list(range(d.n_components))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for where in d.locations.values():
        a, b = find(where[True][0]), find(where[False][0])
        if a != b:
            parent[a] = b
    return len({find(k) for k in range(d.n_components)})


class MinSubdiagram(NamedTuple):
    minimum: int
    witnesses: tuple[tuple[int, ...], ...]  # inclusion-minimal, lexicographically sorted
    subsets_checked: int


def _genus_chunk(args):
    d, masks = args
    cs = d.crossings
    out = []
    for mask in masks:
        drop = [c for j, c in enumerate(cs) if mask >> j & 1]
        out.append((mask, fast_genus(subdiagram(d, drop))))
    return out


def min_genus_subdiagram(
    d: Diagram, cap: int = SUBDIAGRAM_CAP, threads: int | None = None
) -> MinSubdiagram:
    """Minimum Carter genus over all subdiagrams, with every inclusion-minimal
    set of virtualized crossings attaining it."""
    n = d.n_crossings
    if n > cap:
        raise CapExceededError(f"{n} crossings exceeds the subdiagram cap {cap}")
    total = 1 << n
    workers = worker_count() if threads is None else threads
    size = max(1, total // (4 * workers))
    chunks = [(d, range(a, min(total, a + size))) for a in range(0, total, size)]
    best = None
    hits: list[int] = []
    for part in pmap(_genus_chunk, chunks, workers):
        for mask, g in part:
            if best is None or g < best:
                best, hits = g, [mask]
            elif g == best:
                hits.append(mask)
    hits.sort(key=lambda m: (bin(m).count("1"), m))
    minimal: list[int] = []
    for m in hits:
        if not any(m & k == k for k in minimal):
            minimal.append(m)
    cs = d.crossings
    wits = sorted(tuple(c for j, c in enumerate(cs) if m >> j & 1) for m in minimal)
    return MinSubdiagram(best, tuple(wits), total)
