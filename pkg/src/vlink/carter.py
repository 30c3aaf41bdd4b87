"""Carter surface of a diagram as a ribbon graph.

Each classical crossing is a 4-valent vertex whose half-edges are the four
strand ends.  With the over-strand running South to North and the
under-strand East to West at a positive crossing, reading counterclockwise
from North gives ``(OVER_OUT, UNDER_OUT, OVER_IN, UNDER_IN)``; a negative
crossing swaps the two under-slots.  Faces are the orbits of
``h -> rotation_successor(pairing(h))`` and each one is capped by a disc.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import NamedTuple, Union

from .gauss import Diagram, EdgeId

__all__ = [
    "Slot",
    "HalfEdge",
    "FreeLoopSide",
    "RibbonGraph",
    "SurfaceComponent",
    "GenusReport",
    "build_ribbon_graph",
    "trace_faces",
    "connected_components",
    "genus",
    "surface_signature",
]


class Slot(IntEnum):
    OVER_IN = 0
    OVER_OUT = 1
    UNDER_IN = 2
    UNDER_OUT = 3

    @property
    def short(self) -> str:
        return ("OI", "OO", "UI", "UO")[self]


PLUS_ROTATION = (Slot.OVER_OUT, Slot.UNDER_OUT, Slot.OVER_IN, Slot.UNDER_IN)
MINUS_ROTATION = (Slot.OVER_OUT, Slot.UNDER_IN, Slot.OVER_IN, Slot.UNDER_OUT)


def _successor_table(rotation):
    return {rotation[i]: rotation[(i + 1) % 4] for i in range(4)}


_SUCC = {1: _successor_table(PLUS_ROTATION), -1: _successor_table(MINUS_ROTATION)}


def in_slot(over: bool) -> Slot:
    return Slot.OVER_IN if over else Slot.UNDER_IN


def out_slot(over: bool) -> Slot:
    return Slot.OVER_OUT if over else Slot.UNDER_OUT


class HalfEdge(NamedTuple):
    vertex: int
    slot: Slot

    def __str__(self) -> str:
        return f"{self.vertex}{self.slot.short}"


class FreeLoopSide(NamedTuple):
    """One side of the loop edge of a crossing-free component."""

    component: int
    side: int

    def __str__(self) -> str:
        return f"L{self.component}{'ab'[self.side]}"


Face = tuple[Union[HalfEdge, FreeLoopSide], ...]


@dataclass(frozen=True)
class RibbonGraph:
    rotation: dict[int, tuple[Slot, ...]]
    pairing: dict[HalfEdge, HalfEdge]
    edge_of: dict[HalfEdge, EdgeId]  # half-edge -> semi-arc it bounds
    free_loops: tuple[int, ...]
    signs: dict[int, int]

    @property
    def n_vertices(self) -> int:
        return len(self.rotation)

    @property
    def n_edges(self) -> int:
        return len(self.pairing) // 2 + len(self.free_loops)

    def successor(self, h: HalfEdge) -> HalfEdge:
        """Face-successor: cross the edge, then turn to the next slot."""
        p = self.pairing[h]
        return HalfEdge(p.vertex, _SUCC[self.signs[p.vertex]][p.slot])


def build_ribbon_graph(d: Diagram) -> RibbonGraph:
    rotation: dict[int, tuple[Slot, ...]] = {}
    signs: dict[int, int] = {}
    pairing: dict[HalfEdge, HalfEdge] = {}
    edge_of: dict[HalfEdge, EdgeId] = {}
    free = []
    for k, comp in enumerate(d.components):
        n = len(comp)
        if n == 0:
            free.append(k)
            continue
        for i, e in enumerate(comp):
            signs[e.crossing] = e.sign
            rotation[e.crossing] = PLUS_ROTATION if e.sign > 0 else MINUS_ROTATION
            nxt = comp[(i + 1) % n]
            a = HalfEdge(e.crossing, out_slot(e.over))
            b = HalfEdge(nxt.crossing, in_slot(nxt.over))
            pairing[a] = b
            pairing[b] = a
            edge_of[a] = edge_of[b] = EdgeId(k, i)
    return RibbonGraph(rotation, pairing, edge_of, tuple(free), signs)


def trace_faces(g: RibbonGraph) -> list[Face]:
    """Orbits of the face-successor map, in a deterministic order."""
    faces: list[Face] = []
    seen: set[HalfEdge] = set()
    for v in sorted(g.rotation):
        for slot in g.rotation[v]:
            h = HalfEdge(v, slot)
            if h in seen:
                continue
            orbit = []
            while h not in seen:
                seen.add(h)
                orbit.append(h)
                h = g.successor(h)
            faces.append(tuple(orbit))
    for k in g.free_loops:
        faces.append((FreeLoopSide(k, 0),))
        faces.append((FreeLoopSide(k, 1),))
    return faces


def face_edges(g: RibbonGraph, face: Face) -> list[EdgeId]:
    """Edges traversed by a face, with multiplicity."""
    out = []
    for h in face:
        if isinstance(h, FreeLoopSide):
            out.append(EdgeId(h.component, 0))
        else:
            out.append(g.edge_of[h])
    return out


def connected_components(d: Diagram) -> list[tuple[int, ...]]:
    """Partition link components into classes joined by shared crossings."""
    parent = list(range(d.n_components))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for where in d.locations.values():
        if len(where) == 2:
            a, b = find(where[True][0]), find(where[False][0])
            if a != b:
                parent[max(a, b)] = min(a, b)
    classes: dict[int, list[int]] = {}
    for k in range(d.n_components):
        classes.setdefault(find(k), []).append(k)
    return [tuple(v) for v in classes.values()]


class SurfaceComponent(NamedTuple):
    link_components: tuple[int, ...]
    vertices: int
    edges: int
    faces: int

    @property
    def euler(self) -> int:
        return self.vertices - self.edges + self.faces

    @property
    def genus(self) -> int:
        return (2 - self.euler) // 2


class GenusReport(NamedTuple):
    components: tuple[SurfaceComponent, ...]

    @property
    def total(self) -> int:
        return sum(c.genus for c in self.components)

    @property
    def euler(self) -> int:
        return sum(c.euler for c in self.components)

    def __int__(self) -> int:
        return self.total


def genus(d: Diagram, g: RibbonGraph | None = None) -> GenusReport:
    """Genus of each connected piece of the Carter surface, and their sum."""
    if g is None:
        g = build_ribbon_graph(d)
    classes = connected_components(d)
    owner = {k: idx for idx, cls in enumerate(classes) for k in cls}
    counts = [[0, 0, 0] for _ in classes]
    for c, where in d.locations.items():
        counts[owner[where[True][0]]][0] += 1
    for k, comp in enumerate(d.components):
        counts[owner[k]][1] += len(comp)
        if not comp:
            counts[owner[k]][2] += 2
    for face in trace_faces(g):
        h = face[0]
        if isinstance(h, HalfEdge):
            k = g.edge_of[h].component
            counts[owner[k]][2] += 1
    comps = []
    for cls, (v, e, f) in zip(classes, counts):
        sc = SurfaceComponent(cls, v, e, f)
        if sc.euler % 2 or sc.euler > 2:
            raise AssertionError(f"impossible Euler characteristic {sc.euler} for {cls}")
        comps.append(sc)
    return GenusReport(tuple(comps))


def surface_signature(d: Diagram) -> tuple[int, ...]:
    """Sorted genera of the Carter surface pieces; equal iff homeomorphic."""
    return tuple(sorted(c.genus for c in genus(d).components))


def flat_faces(d: Diagram) -> list[list[int]]:
    """Faces as lists of edges, each edge named by the flat index of its
    starting entry (components concatenated in order).

    Integer-only tracer for hot loops; free loops are left out.
    """
    lengths = [len(c) for c in d.components]
    total = sum(lengths)
    nxt = [0] * total
    prv = [0] * total
    t = 0
    for n in lengths:
        for i in range(n):
            nxt[t + i] = t + (i + 1) % n
            prv[t + (i + 1) % n] = t + i
        t += n
    # half-edges: 2t = in-end of entry t, 2t + 1 = out-end
    pair = [0] * (2 * total)
    for t in range(total):
        a, b = 2 * t + 1, 2 * nxt[t]
        pair[a] = b
        pair[b] = a
    succ = [0] * (2 * total)
    for c, where in d.locations.items():
        ko, io = where[True]
        ku, iu = where[False]
        o = sum(lengths[:ko]) + io
        u = sum(lengths[:ku]) + iu
        oi, oo, ui, uo = 2 * o, 2 * o + 1, 2 * u, 2 * u + 1
        if d.components[ko][io].sign > 0:
            succ[oo], succ[uo], succ[oi], succ[ui] = uo, oi, ui, oo
        else:
            succ[oo], succ[ui], succ[oi], succ[uo] = ui, oi, uo, oo
    seen = [False] * (2 * total)
    faces = []
    for start in range(2 * total):
        if seen[start]:
            continue
        face = []
        h = start
        while not seen[h]:
            seen[h] = True
            face.append(h >> 1 if h & 1 else prv[h >> 1])
            h = succ[pair[h]]
        faces.append(face)
    return faces
