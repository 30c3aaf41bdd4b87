"""Seeded random diagrams and exhaustive enumeration of small ones."""
from __future__ import annotations

import itertools
import random
from typing import Iterator

from .gauss import Diagram, Entry
from .parity import Colouring, admissible_weightings, enumerate_colourings

__all__ = ["random_diagram", "random_colouring", "all_diagrams", "canonical_form"]


def random_diagram(seed: int, max_crossings: int, max_components: int = 1) -> Diagram:
    """Uniform-ish random valid diagram; deterministic in its arguments."""
    if max_crossings < 0 or max_components < 1:
        raise ValueError("need max_crossings >= 0 and max_components >= 1")
    rng = random.Random(f"vlink:{seed}:{max_crossings}:{max_components}")
    n = rng.randint(0, max_crossings)
    m = rng.randint(1, max_components)
    entries = []
    for c in range(1, n + 1):
        s = rng.choice((1, -1))
        entries += [Entry(c, True, s), Entry(c, False, s)]
    rng.shuffle(entries)
    cuts = sorted(rng.randint(0, len(entries)) for _ in range(m - 1))
    bounds = [0, *cuts, len(entries)]
    return Diagram(tuple(tuple(entries[a:b]) for a, b in zip(bounds, bounds[1:])))


def random_colouring(d: Diagram, rng: random.Random) -> Colouring:
    """Random admissible weighting and random base colours."""
    space = admissible_weightings(d)
    w = space.combine([rng.randint(0, 1) for _ in range(space.dim)])
    return Colouring(d, w, tuple(rng.randint(0, 1) for _ in range(d.n_components)))


def all_colourings(d: Diagram) -> Iterator[Colouring]:
    for w in admissible_weightings(d):
        yield from enumerate_colourings(d, w)


def _rotations(comp: tuple[Entry, ...]) -> list[tuple[Entry, ...]]:
    return [comp[i:] + comp[:i] for i in range(len(comp))] or [comp]


def _key(comps) -> tuple:
    labels: dict[int, int] = {}
    out = []
    for comp in comps:
        row = []
        for e in comp:
            row.append((labels.setdefault(e.crossing, len(labels) + 1), e.over, e.sign))
        out.append((len(row), tuple(row)))
    return tuple(out)


def canonical_form(d: Diagram) -> tuple:
    """Invariant of the diagram under relabelling, rotation of each component
    and reordering of components."""
    best = None
    for perm in itertools.permutations(d.components):
        for rots in itertools.product(*(_rotations(c) for c in perm)):
            k = _key(rots)
            if best is None or k < best:
                best = k
    return best


def all_diagrams(max_crossings: int, max_components: int, sign: int | None = None) -> Iterator[Diagram]:
    """Every valid diagram up to relabelling, rotation and component order.

    Yields in a deterministic order; each equivalence class appears once.
    With ``sign`` set, only diagrams whose crossings all carry that sign.
    """
    if sign not in (None, 1, -1):
        raise ValueError("sign must be None, 1 or -1")
    seen: set[tuple] = set()
    for n in range(max_crossings + 1):
        for d in _labelled(n, max_components, sign):
            key = canonical_form(d)
            if key not in seen:
                seen.add(key)
                yield d


def _labelled(n: int, max_components: int, sign: int | None = None) -> Iterator[Diagram]:
    # words over 2n slots with crossing labels in first-visit order
    for word in _matchings(2 * n):
        for overs in itertools.product((True, False), repeat=n):
            for signs in itertools.product((1, -1) if sign is None else (sign,), repeat=n):
                first: set[int] = set()
                seq = []
                for c in word:
                    is_first = c not in first
                    first.add(c)
                    over = overs[c - 1] if is_first else not overs[c - 1]
                    seq.append(Entry(c, over, signs[c - 1]))
                for m in range(1, max_components + 1):
                    for cuts in itertools.combinations_with_replacement(range(2 * n + 1), m - 1):
                        bounds = [0, *cuts, 2 * n]
                        yield Diagram(tuple(tuple(seq[a:b]) for a, b in zip(bounds, bounds[1:])))


def _matchings(size: int) -> Iterator[list[int]]:
    """Sequences where labels 1..size/2 each occur twice, in first-visit order."""

    def rec(seq: list[int], open_labels: list[int], next_label: int):
        if len(seq) == size:
            yield list(seq)
            return
        remaining = size - len(seq)
        if next_label <= size // 2 and remaining > len(open_labels):
            seq.append(next_label)
            yield from rec(seq, open_labels + [next_label], next_label + 1)
            seq.pop()
        for lab in open_labels:
            seq.append(lab)
            yield from rec(seq, [x for x in open_labels if x != lab], next_label)
            seq.pop()

    yield from rec([], [], 1)
