"""Edge weightings, colourings and the colour-switch parity.

A closed curve on the Carter surface meeting the diagram transversally is
recorded only through its intersection parities with the semi-arcs: a
:class:`Weighting`.  Such a weighting comes from a curve exactly when it is
a cocycle (every face boundary meets it evenly); colourings additionally need
every link component to meet it evenly.

A :class:`Colouring` assigns 0/1 to each strand so that the colour flips
along an edge of weight 1 and is constant through crossings.  A crossing is
odd when its two strands carry different colours.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import gf2
from .carter import build_ribbon_graph, face_edges, trace_faces
from .gauss import Diagram, EdgeId, UnknownCrossingError, subdiagram

__all__ = [
    "Weighting",
    "Colouring",
    "AdmissibilityReport",
    "WeightingSpace",
    "DomainError",
    "InadmissibleError",
    "is_admissible",
    "admissible_weightings",
    "enumerate_colourings",
    "crossing_parity",
    "parity_map",
    "odd_crossings",
    "project",
    "project_colouring",
    "restrict_colouring",
]


class DomainError(ValueError):
    """Weighting mentions edges that the diagram does not have."""


class InadmissibleError(ValueError):
    pass


@dataclass(frozen=True)
class Weighting:
    """Z2 value per edge, stored as the set of edges carrying 1."""

    ones: frozenset[EdgeId] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "ones", frozenset(EdgeId(*e) for e in self.ones))

    def __getitem__(self, e: EdgeId) -> int:
        return 1 if e in self.ones else 0

    @classmethod
    def zero(cls) -> "Weighting":
        return cls(frozenset())

    @classmethod
    def from_vector(cls, d: Diagram, v: Sequence[int]) -> "Weighting":
        return cls(frozenset(e for e, b in zip(d.edges, v) if b & 1))

    def to_vector(self, d: Diagram) -> np.ndarray:
        return np.array([self[e] for e in d.edges], dtype=np.uint8)

    def check_domain(self, d: Diagram) -> None:
        extra = self.ones - set(d.edges)
        if extra:
            raise DomainError(f"edges not in diagram: {sorted(extra)}")

    def to_json(self) -> list[dict]:
        return [{"component": e.component, "position": e.position} for e in sorted(self.ones)]

    @classmethod
    def from_json(cls, data: Iterable[dict]) -> "Weighting":
        return cls(frozenset(EdgeId(int(x["component"]), int(x["position"])) for x in data))


@lru_cache(maxsize=1 << 14)
def _constraints(d: Diagram) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    """Edge-index lists (mod 2 reduced) for each face and each component."""
    index = {e: i for i, e in enumerate(d.edges)}
    g = build_ribbon_graph(d)
    faces = []
    for f in trace_faces(g):
        odd: set[int] = set()
        for e in face_edges(g, f):
            odd ^= {index[e]}
        faces.append(tuple(sorted(odd)))
    comps = tuple(
        tuple(index[EdgeId(k, i)] for i in range(max(1, len(c)))) for k, c in enumerate(d.components)
    )
    return tuple(faces), comps


def constraint_matrix(d: Diagram) -> np.ndarray:
    """Rows: faces, then link components; columns: ``d.edges``."""
    faces, comps = _constraints(d)
    m = np.zeros((len(faces) + len(comps), len(d.edges)), dtype=np.uint8)
    for r, cols in enumerate(faces + comps):
        for c in cols:
            m[r, c] ^= 1
    return m


class AdmissibilityReport:
    def __init__(self, bad_faces: list[int], odd_components: list[int]):
        self.bad_faces = bad_faces
        self.odd_components = odd_components

    def __bool__(self) -> bool:
        return not self.bad_faces and not self.odd_components

    def __repr__(self) -> str:
        if self:
            return "AdmissibilityReport(ok)"
        return f"AdmissibilityReport(bad_faces={self.bad_faces}, odd_components={self.odd_components})"


def is_admissible(d: Diagram, w: Weighting) -> AdmissibilityReport:
    """Cocycle and component-evenness check; face indices follow ``trace_faces``."""
    w.check_domain(d)
    faces, comps = _constraints(d)
    edges = d.edges
    bits = [w[e] for e in edges]
    bad_faces = [i for i, f in enumerate(faces) if sum(bits[c] for c in f) & 1]
    odd = [k for k, c in enumerate(comps) if sum(bits[i] for i in c) & 1]
    return AdmissibilityReport(bad_faces, odd)


class WeightingSpace:
    """Solution space of the admissibility equations."""

    def __init__(self, d: Diagram, basis: list[Weighting]):
        self.diagram = d
        self.basis = basis

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return 1 << self.dim

    def __iter__(self) -> Iterator[Weighting]:
        vecs = np.array([b.to_vector(self.diagram) for b in self.basis], dtype=np.uint8).reshape(
            self.dim, len(self.diagram.edges)
        )
        for v in gf2.span(vecs):
            yield Weighting.from_vector(self.diagram, v)

    def combine(self, bits: Sequence[int]) -> Weighting:
        ones: set[EdgeId] = set()
        for b, w in zip(bits, self.basis):
            if b:
                ones ^= w.ones
        return Weighting(frozenset(ones))


def admissible_weightings(d: Diagram) -> WeightingSpace:
    basis = gf2.nullspace(constraint_matrix(d))
    return WeightingSpace(d, [Weighting.from_vector(d, row) for row in basis])


def _component_sums(d: Diagram, w: Weighting) -> list[int]:
    return [
        sum(w[EdgeId(k, i)] for i in range(max(1, len(c)))) & 1 for k, c in enumerate(d.components)
    ]


@dataclass(frozen=True)
class Colouring:
    """Base colour per component (the colour at entry 0) plus a weighting."""

    diagram: Diagram
    weighting: Weighting
    base: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "base", tuple(int(b) & 1 for b in self.base))
        if len(self.base) != self.diagram.n_components:
            raise ValueError("need one base colour per component")
        self.weighting.check_domain(self.diagram)
        odd = [k for k, s in enumerate(_component_sums(self.diagram, self.weighting)) if s]
        if odd:
            raise InadmissibleError(f"components {odd} meet the curve an odd number of times")

    @cached_property
    def colours(self) -> tuple[tuple[int, ...], ...]:
        """Strand colour at every entry."""
        out = []
        for k, comp in enumerate(self.diagram.components):
            c = self.base[k]
            row = []
            for i in range(len(comp)):
                row.append(c)
                c ^= self.weighting[EdgeId(k, i)]
            out.append(tuple(row))
        return tuple(out)

    @classmethod
    def from_entry_colours(
        cls, d: Diagram, colours: Sequence[Sequence[int]], loop_colours: Sequence[int] | None = None
    ) -> "Colouring":
        """Rebuild from per-entry colours; empty components take ``loop_colours``."""
        ones = set()
        base = []
        for k, row in enumerate(colours):
            n = len(row)
            if n == 0:
                base.append(loop_colours[k] if loop_colours is not None else 0)
                continue
            base.append(row[0])
            for i in range(n):
                if row[i] != row[(i + 1) % n]:
                    ones.add(EdgeId(k, i))
        return cls(d, Weighting(frozenset(ones)), tuple(base))

    def admissible(self) -> bool:
        return bool(is_admissible(self.diagram, self.weighting))

    def flipped(self) -> "Colouring":
        return Colouring(self.diagram, self.weighting, tuple(1 - b for b in self.base))


def enumerate_colourings(d: Diagram, w: Weighting) -> list[Colouring]:
    """All colourings for ``w``: none, or one per base-colour vector."""
    w.check_domain(d)
    if any(_component_sums(d, w)):
        return []
    return [Colouring(d, w, base) for base in itertools.product((0, 1), repeat=d.n_components)]


def crossing_parity(col: Colouring, c: int) -> int:
    d = col.diagram
    if c not in d.locations:
        raise UnknownCrossingError(c)
    (ko, io), (ku, iu) = d.locations[c][True], d.locations[c][False]
    return col.colours[ko][io] ^ col.colours[ku][iu]


def parity_map(col: Colouring) -> dict[int, int]:
    return {c: crossing_parity(col, c) for c in col.diagram.crossings}


def odd_crossings(col: Colouring) -> set[int]:
    return {c for c, p in parity_map(col).items() if p}


def restrict_colouring(col: Colouring, virtualize: Iterable[int]) -> Colouring:
    """Colouring induced on a subdiagram; merged edges XOR their weights."""
    drop = set(virtualize)
    d = col.diagram
    sub = subdiagram(d, drop)
    colours = [
        [c for e, c in zip(comp, row) if e.crossing not in drop]
        for comp, row in zip(d.components, col.colours)
    ]
    return Colouring.from_entry_colours(sub, colours, col.base)


def project(d: Diagram, col: Colouring) -> Diagram:
    """Virtualize every odd crossing."""
    if col.diagram != d:
        raise ValueError("colouring belongs to a different diagram")
    return subdiagram(d, odd_crossings(col))


def project_colouring(col: Colouring) -> Colouring:
    return restrict_colouring(col, odd_crossings(col))
