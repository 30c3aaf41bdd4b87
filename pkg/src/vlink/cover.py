"""Double cover of the Carter ribbon graph cut along a weighting.

Each vertex and half-edge is doubled onto sheets 0 and 1.  An edge of weight
1 swaps sheets, an edge of weight 0 stays on its sheet, and rotations are
copied from the base.  A colouring picks, for every link component, the lift
that starts at entry 0 on the sheet given by its base colour.  The Gauss
code of those chosen lifts is compared against parity projection.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .carter import (
    HalfEdge,
    Slot,
    _SUCC,
    build_ribbon_graph,
    genus,
    in_slot,
    out_slot,
)
from .gauss import Diagram, Entry, canonical_relabel, serialize
from .parity import Colouring, InadmissibleError, Weighting, is_admissible, project

__all__ = [
    "LiftedHalfEdge",
    "CoverGraph",
    "build_double_cover",
    "preferred_lift",
    "verify_lift_oracle",
    "LiftCheck",
]


class LiftedHalfEdge(NamedTuple):
    half: HalfEdge
    sheet: int


@dataclass(frozen=True)
class CoverGraph:
    signs: dict[int, int]  # base crossing -> sign; rotation of both lifts
    pairing: dict[LiftedHalfEdge, LiftedHalfEdge]
    free_loops: tuple[tuple[int, tuple[int, ...]], ...]  # (component, sheets it visits)

    @property
    def vertices(self) -> list[tuple[int, int]]:
        return [(c, s) for c in sorted(self.signs) for s in (0, 1)]

    @property
    def n_vertices(self) -> int:
        return 2 * len(self.signs)

    @property
    def n_edges(self) -> int:
        return len(self.pairing) // 2 + len(self.free_loops)

    def successor(self, h: LiftedHalfEdge) -> LiftedHalfEdge:
        p = self.pairing[h]
        v = p.half.vertex
        return LiftedHalfEdge(HalfEdge(v, _SUCC[self.signs[v]][p.half.slot]), p.sheet)

    def faces(self) -> list[tuple[LiftedHalfEdge, ...]]:
        seen: set[LiftedHalfEdge] = set()
        out = []
        for h in sorted(self.pairing):
            if h in seen:
                continue
            orbit = []
            while h not in seen:
                seen.add(h)
                orbit.append(h)
                h = self.successor(h)
            out.append(tuple(orbit))
        return out

    @property
    def n_faces(self) -> int:
        # a free loop, lifted to one or two circles, bounds two faces per circle
        return len(self.faces()) + 2 * len(self.free_loops)

    @property
    def euler(self) -> int:
        # free loops count as (V, E, F) = (0, 0, 2) per lifted circle
        return self.n_vertices - (len(self.pairing) // 2) + self.n_faces

    def n_connected(self) -> int:
        parent: dict = {}

        def find(x):
            parent.setdefault(x, x)
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for v in self.vertices:
            find(v)
        for a, b in self.pairing.items():
            ra, rb = find((a.half.vertex, a.sheet)), find((b.half.vertex, b.sheet))
            if ra != rb:
                parent[ra] = rb
        return len({find(v) for v in self.vertices}) + len(self.free_loops)


def build_double_cover(d: Diagram, w: Weighting) -> CoverGraph:
    report = is_admissible(d, w)
    if not report:
        raise InadmissibleError(f"weighting is not admissible: {report!r}")
    g = build_ribbon_graph(d)
    pairing: dict[LiftedHalfEdge, LiftedHalfEdge] = {}
    for h, other in g.pairing.items():
        swap = w[g.edge_of[h]]
        for s in (0, 1):
            pairing[LiftedHalfEdge(h, s)] = LiftedHalfEdge(other, s ^ swap)
    loops = []
    for k in g.free_loops:
        if w[(k, 0)]:
            loops.append((k, (0, 1)))
        else:
            loops.extend([(k, (0,)), (k, (1,))])
    return CoverGraph(dict(g.signs), pairing, tuple(loops))


def _trace_lift(cover: CoverGraph, d: Diagram, k: int, sheet: int) -> list[tuple[int, int, bool, int]]:
    """Walk the cover from entry 0 of component ``k`` on ``sheet``.

    Returns ``(crossing, sheet, over, sign)`` for each passage.
    """
    comp = d.components[k]
    if not comp:
        return []
    first = comp[0]
    start = LiftedHalfEdge(HalfEdge(first.crossing, in_slot(first.over)), sheet)
    out = [(first.crossing, sheet, first.over, cover.signs[first.crossing])]
    h = LiftedHalfEdge(HalfEdge(first.crossing, out_slot(first.over)), sheet)
    while True:
        p = cover.pairing[h]
        if p == start:
            break
        v = p.half.vertex
        over = p.half.slot == Slot.OVER_IN
        out.append((v, p.sheet, over, cover.signs[v]))
        h = LiftedHalfEdge(HalfEdge(v, out_slot(over)), p.sheet)
        if len(out) > 2 * len(comp):
            raise AssertionError("lift does not close up")
    return out


def preferred_lift(d: Diagram, col: Colouring) -> Diagram:
    """Gauss code of the lift chosen by the colouring, canonically relabelled.

    A lifted vertex is a crossing of the lift only when both of its passages
    lie on chosen components.
    """
    if col.diagram != d:
        raise ValueError("colouring belongs to a different diagram")
    cover = build_double_cover(d, col.weighting)
    walks = [_trace_lift(cover, d, k, col.base[k]) for k in range(d.n_components)]
    passages: dict[tuple[int, int], set[bool]] = {}
    for walk in walks:
        for v, s, over, _ in walk:
            passages.setdefault((v, s), set()).add(over)
    labels: dict[tuple[int, int], int] = {}
    comps = []
    for walk in walks:
        row = []
        for v, s, over, sign in walk:
            if len(passages[(v, s)]) == 2:
                label = labels.setdefault((v, s), len(labels) + 1)
                row.append(Entry(label, over, sign))
        comps.append(tuple(row))
    return Diagram(tuple(comps))


class LiftCheck(NamedTuple):
    ok: bool
    lift_code: str
    projection_code: str
    lift_genus: int
    projection_genus: int

    def __bool__(self) -> bool:
        return self.ok

    def diff(self) -> str:
        if self.ok:
            return ""
        return (
            f"lift {self.lift_code!r} (genus {self.lift_genus}) != "
            f"projection {self.projection_code!r} (genus {self.projection_genus})"
        )


def verify_lift_oracle(d: Diagram, col: Colouring) -> LiftCheck:
    lift = preferred_lift(d, col)
    proj = canonical_relabel(project(d, col))
    lc, pc = serialize(lift), serialize(proj)
    lg, pg = genus(lift).total, genus(proj).total
    return LiftCheck(lc == pc and lg == pg, lc, pc, lg, pg)
