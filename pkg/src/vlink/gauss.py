"""Signed multi-component Gauss codes.

A diagram is an ordered tuple of components; each component is a cyclic
sequence of :class:`Entry` records.  Virtual crossings are never stored, so
two virtual diagrams related by detour moves have the same code.

Text form (whitespace ignored)::

    code      := component (';' component)*
    component := entry*
    entry     := ('O' | 'U') digits ('+' | '-')

``"O1+U2+U1+O2+"`` is the virtual trefoil, ``""`` the unknot and ``";"`` the
two-component unlink.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

__all__ = [
    "Entry",
    "EdgeId",
    "Diagram",
    "GaussCodeSyntaxError",
    "InvalidDiagramError",
    "UnknownCrossingError",
    "parse",
    "serialize",
    "validate",
    "subdiagram",
    "crossing_change",
    "change_crossings",
    "canonical_relabel",
    "canonical_code",
]


class GaussCodeSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class InvalidDiagramError(ValueError):
    def __init__(self, violations: list[str]):
        super().__init__("invalid diagram: " + "; ".join(violations))
        self.violations = violations


class UnknownCrossingError(KeyError):
    pass


class Entry(NamedTuple):
    """One passage of a component through a classical crossing."""

    crossing: int
    over: bool
    sign: int  # +1 or -1

    def __str__(self) -> str:
        return f"{'O' if self.over else 'U'}{self.crossing}{'+' if self.sign > 0 else '-'}"


class EdgeId(NamedTuple):
    """Semi-arc from entry ``position`` to entry ``position + 1`` of a component.

    A crossing-free component has the single loop edge ``position == 0``.
    """

    component: int
    position: int


@dataclass(frozen=True)
class Diagram:
    components: tuple[tuple[Entry, ...], ...]

    def __post_init__(self):
        comps = self.components
        if not (
            type(comps) is tuple
            and all(type(c) is tuple and all(type(e) is Entry for e in c) for c in comps)
        ):
            object.__setattr__(self, "components", tuple(tuple(Entry(*e) for e in c) for c in comps))
        if not self.components:
            raise ValueError("a diagram has at least one component")

    def __str__(self) -> str:
        return serialize(self)

    @cached_property
    def locations(self) -> dict[int, dict[bool, tuple[int, int]]]:
        """crossing -> {over: (component, position)}"""
        loc: dict[int, dict[bool, tuple[int, int]]] = {}
        for k, comp in enumerate(self.components):
            for i, e in enumerate(comp):
                loc.setdefault(e.crossing, {})[e.over] = (k, i)
        return loc

    @property
    def crossings(self) -> list[int]:
        return sorted(self.locations)

    @property
    def n_crossings(self) -> int:
        return sum(len(c) for c in self.components) // 2

    @property
    def n_components(self) -> int:
        return len(self.components)

    @cached_property
    def edges(self) -> tuple[EdgeId, ...]:
        return tuple(
            EdgeId(k, i)
            for k, comp in enumerate(self.components)
            for i in range(max(1, len(comp)))
        )

    def sign(self, c: int) -> int:
        k, i = self.entry(c, True)
        return self.components[k][i].sign

    def entry(self, c: int, over: bool) -> tuple[int, int]:
        try:
            return self.locations[c][over]
        except KeyError:
            raise UnknownCrossingError(c) from None


def parse(text: str) -> Diagram:
    """Parse a Gauss code and validate it.

    Raises :class:`GaussCodeSyntaxError` with the offending character offset, or
    :class:`InvalidDiagramError` listing every violated invariant.
    """
    components: list[list[Entry]] = [[]]
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == ";":
            components.append([])
            i += 1
            continue
        if ch not in "OU":
            raise GaussCodeSyntaxError(f"expected 'O', 'U' or ';', got {ch!r}", i)
        i += 1
        while i < n and text[i].isspace():
            i += 1
        j = i
        while j < n and text[j].isdigit():
            j += 1
        if j == i:
            raise GaussCodeSyntaxError("expected crossing label", i)
        label = int(text[i:j])
        if label <= 0:
            raise GaussCodeSyntaxError("crossing labels must be positive", i)
        i = j
        while i < n and text[i].isspace():
            i += 1
        if i >= n or text[i] not in "+-":
            raise GaussCodeSyntaxError("expected sign '+' or '-'", i)
        components[-1].append(Entry(label, ch == "O", 1 if text[i] == "+" else -1))
        i += 1
    d = Diagram(tuple(tuple(c) for c in components))
    problems = validate(d)
    if problems:
        raise InvalidDiagramError(problems)
    return d


def serialize(d: Diagram) -> str:
    return ";".join("".join(str(e) for e in comp) for comp in d.components)


def validate(d: Diagram) -> list[str]:
    """Return a list of human-readable violations; empty iff ``d`` is valid."""
    seen: dict[int, list[Entry]] = {}
    for comp in d.components:
        for e in comp:
            seen.setdefault(e.crossing, []).append(e)
    problems = []
    for c in sorted(seen):
        entries = seen[c]
        if c <= 0:
            problems.append(f"crossing {c}: label must be positive")
        if len(entries) != 2:
            problems.append(f"crossing {c}: occurs {len(entries)} times, expected 2")
            continue
        passages = {e.over for e in entries}
        if True not in passages:
            problems.append(f"crossing {c}: lacks an Over passage")
        if False not in passages:
            problems.append(f"crossing {c}: lacks an Under passage")
        if entries[0].sign != entries[1].sign:
            problems.append(f"crossing {c}: sign mismatch")
        if any(e.sign not in (1, -1) for e in entries):
            problems.append(f"crossing {c}: sign must be +1 or -1")
    return problems


def _check_known(d: Diagram, crossings: Iterable[int]) -> None:
    unknown = sorted(set(crossings) - set(d.locations))
    if unknown:
        raise UnknownCrossingError(f"unknown crossing(s) {unknown}")


def subdiagram(d: Diagram, virtualize: Iterable[int]) -> Diagram:
    """Delete the chords of the crossings in ``virtualize``."""
    drop = set(virtualize)
    _check_known(d, drop)
    if not drop:
        return d
    return Diagram(tuple(tuple(e for e in comp if e.crossing not in drop) for comp in d.components))


def crossing_change(d: Diagram, c: int) -> Diagram:
    """Swap over/under at ``c``; the sign flips with it."""
    return change_crossings(d, [c])


def change_crossings(d: Diagram, crossings: Iterable[int]) -> Diagram:
    flip = set(crossings)
    _check_known(d, flip)
    return Diagram(
        tuple(
            tuple(Entry(e.crossing, not e.over, -e.sign) if e.crossing in flip else e for e in comp)
            for comp in d.components
        )
    )


def canonical_relabel(d: Diagram) -> Diagram:
    """Relabel crossings 1, 2, ... in order of first visit."""
    labels: dict[int, int] = {}
    for comp in d.components:
        for e in comp:
            labels.setdefault(e.crossing, len(labels) + 1)
    return Diagram(
        tuple(tuple(Entry(labels[e.crossing], e.over, e.sign) for e in comp) for comp in d.components)
    )


def canonical_code(d: Diagram) -> str:
    return serialize(canonical_relabel(d))
