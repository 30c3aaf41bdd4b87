"""Reidemeister moves on Gauss codes, carrying a colouring along.

Sites:

* R1: the two entries of a crossing are adjacent on one component.
* R2: crossings ``a``, ``b`` of opposite sign, whose over-entries are adjacent
  on one strand and whose under-entries are adjacent on another.
* R3: a triangular face of the Carter surface whose sides are one over-over,
  one under-under and one mixed strand segment.  The move reverses the order
  of the two entries on each side.

Moves are done in a disc the curve avoids where possible: new passages take
the colour of one end of the edge they sit on.  When no such choice is
admissible (the new strand may split a face the curve runs through) the
remaining colour assignments are tried in a fixed order.  When a curve
crosses an R3 triangle it is first pushed across the triangle corner where
its two crossing points meet (a coboundary, so both strand colours at that
crossing flip together).  Surviving entries keep their colour, so the base
colour of a component is always the colour at its current first entry.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence

import numpy as np

from .carter import HalfEdge, build_ribbon_graph, flat_faces, trace_faces
from .gauss import Diagram, EdgeId, Entry
from .parity import Colouring, InadmissibleError, admissible_weightings, is_admissible, parity_map

__all__ = [
    "MoveKind",
    "MoveEvent",
    "MoveError",
    "AxiomReport",
    "available_moves",
    "is_applicable",
    "apply_move",
    "check_axioms",
    "MovePlan",
    "plan_move",
    "transport",
    "colouring_state",
    "colouring_states",
    "state_colouring",
    "batch_axiom_violations",
    "r1_sites",
    "r2_sites",
    "r3_sites",
]


class MoveError(ValueError):
    """The move does not apply to the diagram."""


class MoveKind(str, enum.Enum):
    R1_ADD = "R1_add"
    R1_REMOVE = "R1_remove"
    R2_ADD = "R2_add"
    R2_REMOVE = "R2_remove"
    R3 = "R3"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class MoveEvent:
    """One move instance.

    ``crossings`` names the crossings removed (R1/R2 removal) or permuted (R3).
    ``edges`` names the target edges of an addition, or the triangle sides of
    an R3.  For R1_add, ``over_first`` says the strand meets the new crossing
    as Over first; for R2_add it says the strand on ``edges[0]`` is the
    over-strand, ``parallel`` says the second strand meets the new crossings
    in the same order, and ``sign`` is the sign of the first new crossing.
    """

    kind: MoveKind
    crossings: tuple[int, ...] = ()
    edges: tuple[EdgeId, ...] = ()
    over_first: bool | None = None
    parallel: bool | None = None
    sign: int | None = None

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind.value}
        if self.crossings:
            out["crossings"] = list(self.crossings)
        if self.edges:
            out["edges"] = [{"component": e.component, "position": e.position} for e in self.edges]
        for name in ("over_first", "parallel", "sign"):
            v = getattr(self, name)
            if v is not None:
                out[name] = v
        return out

    def __str__(self) -> str:
        parts = [self.kind.value]
        if self.crossings:
            parts.append("c=" + ",".join(map(str, self.crossings)))
        if self.edges:
            parts.append("e=" + ",".join(f"{e.component}:{e.position}" for e in self.edges))
        if self.over_first is not None:
            parts.append("over_first" if self.over_first else "under_first")
        if self.parallel is not None:
            parts.append("parallel" if self.parallel else "antiparallel")
        if self.sign is not None:
            parts.append("sign" + ("+" if self.sign > 0 else "-"))
        return " ".join(parts)


def _next(d: Diagram, k: int, i: int) -> tuple[int, int]:
    return k, (i + 1) % len(d.components[k])


def _adjacent(d: Diagram, x: tuple[int, int], y: tuple[int, int]) -> bool:
    return x[0] == y[0] and (_next(d, *x) == y or _next(d, *y) == x)


def r1_sites(d: Diagram) -> list[int]:
    return [c for c, loc in sorted(d.locations.items()) if _adjacent(d, loc[True], loc[False])]


def r2_sites(d: Diagram) -> list[tuple[int, int]]:
    out = []
    loc = d.locations
    cs = sorted(loc)
    for ia, a in enumerate(cs):
        oa, ua = loc[a][True], loc[a][False]
        sa = d.components[oa[0]][oa[1]].sign
        for b in cs[ia + 1 :]:
            ob, ub = loc[b][True], loc[b][False]
            if d.components[ob[0]][ob[1]].sign == sa:
                continue
            if _adjacent(d, oa, ob) and _adjacent(d, ua, ub):
                out.append((a, b))
    return out


def r3_sites(d: Diagram) -> list[tuple[tuple[int, ...], tuple[EdgeId, ...]]]:
    """Triangular faces with the R3 over/under pattern, as (crossings, sides)."""
    g = build_ribbon_graph(d)
    out = []
    for face in trace_faces(g):
        if len(face) != 3 or not all(isinstance(h, HalfEdge) for h in face):
            continue
        if len({h.vertex for h in face}) != 3:
            continue
        sides = tuple(sorted(g.edge_of[h] for h in face))
        kinds = []
        for k, i in sides:
            comp = d.components[k]
            kinds.append((comp[i].over, comp[(i + 1) % len(comp)].over))
        if (True, True) in kinds and (False, False) in kinds:
            out.append((tuple(sorted(h.vertex for h in face)), sides))
    out.sort()
    return out


def available_moves(d: Diagram, additions: bool = True) -> list[MoveEvent]:
    """Every applicable move, removals and R3 first, then additions."""
    moves = [MoveEvent(MoveKind.R1_REMOVE, (c,)) for c in r1_sites(d)]
    moves += [MoveEvent(MoveKind.R2_REMOVE, pair) for pair in r2_sites(d)]
    moves += [MoveEvent(MoveKind.R3, cs, sides) for cs, sides in r3_sites(d)]
    if additions:
        moves += r1_additions(d) + r2_additions(d)
    return moves


def r1_additions(d: Diagram) -> list[MoveEvent]:
    return [
        MoveEvent(MoveKind.R1_ADD, (), (e,), over_first=of, sign=s)
        for e in d.edges
        for of in (True, False)
        for s in (1, -1)
    ]


def r2_additions(d: Diagram) -> list[MoveEvent]:
    return [
        MoveEvent(MoveKind.R2_ADD, (), (e1, e2), over_first=of, parallel=par, sign=s)
        for e1, e2 in itertools.combinations_with_replacement(d.edges, 2)
        for of in (True, False)
        for par in (True, False)
        for s in (1, -1)
    ]


def is_applicable(d: Diagram, m: MoveEvent) -> bool:
    if m.kind is MoveKind.R1_REMOVE:
        return len(m.crossings) == 1 and m.crossings[0] in r1_sites(d)
    if m.kind is MoveKind.R2_REMOVE:
        return tuple(sorted(m.crossings)) in r2_sites(d)
    if m.kind is MoveKind.R3:
        return (tuple(sorted(m.crossings)), tuple(sorted(m.edges))) in r3_sites(d)
    edges = set(d.edges)
    if m.kind is MoveKind.R1_ADD:
        return (
            len(m.edges) == 1 and m.edges[0] in edges and m.over_first is not None and m.sign in (1, -1)
        )
    if m.kind is MoveKind.R2_ADD:
        return (
            len(m.edges) == 2
            and m.edges[0] <= m.edges[1]
            and all(e in edges for e in m.edges)
            and m.over_first is not None
            and m.parallel is not None
            and m.sign in (1, -1)
        )
    return False


# -- application ------------------------------------------------------------
#
# A colouring is handled as a flat uint8 state: the colour at every entry
# (components concatenated) followed by one slot per component holding its
# base colour.  A move compiles once per diagram into a plan that maps old
# states to new ones, so a whole batch of colourings is carried across with
# a handful of array operations.


def state_size(d: Diagram) -> int:
    return sum(len(c) for c in d.components) + d.n_components


def _offsets(d: Diagram) -> list[int]:
    out, t = [], 0
    for c in d.components:
        out.append(t)
        t += len(c)
    return out


def colouring_state(col: Colouring) -> np.ndarray:
    flat = [c for row in col.colours for c in row]
    return np.array(flat + list(col.base), dtype=np.uint8)


def state_colouring(d: Diagram, s: Sequence[int]) -> Colouring:
    n = sum(len(c) for c in d.components)
    rows = [[int(s[o + i]) for i in range(len(c))] for o, c in zip(_offsets(d), d.components)]
    return Colouring.from_entry_colours(d, rows, [int(x) for x in s[n:]])


def colouring_states(d: Diagram) -> np.ndarray:
    """Every colouring of ``d`` with an admissible weighting, one per row.

    Rows run over the weighting space (in its iteration order), then over
    base-colour vectors in lexicographic order.
    """
    space = admissible_weightings(d)
    index = {e: j for j, e in enumerate(d.edges)}
    ws = np.array([w.to_vector(d) for w in space], dtype=np.uint8).reshape(len(space), len(d.edges))
    bases = np.array(list(itertools.product((0, 1), repeat=d.n_components)), dtype=np.uint8)
    nw, nb = len(ws), len(bases)
    out = np.zeros((nw * nb, state_size(d)), dtype=np.uint8)
    n = sum(len(c) for c in d.components)
    for k, (o, comp) in enumerate(zip(_offsets(d), d.components)):
        cols = [index[EdgeId(k, i)] for i in range(len(comp))]
        pre = np.zeros((nw, len(comp)), dtype=np.uint8)
        if len(comp) > 1:
            pre[:, 1:] = np.cumsum(ws[:, cols[:-1]], axis=1) & 1
        base = np.repeat(bases[:, k][None, :], nw, axis=0).reshape(-1)
        out[:, o : o + len(comp)] = np.repeat(pre, nb, axis=0) ^ base[:, None]
        out[:, n + k] = base
    return out


@lru_cache(maxsize=1 << 12)
def face_state_matrix(d: Diagram) -> np.ndarray:
    """Rows: faces; a state is admissible iff every row meets it evenly."""
    lengths = [len(c) for c in d.components]
    nxt = []
    for o, n in zip(_offsets(d), lengths):
        nxt += [o + (i + 1) % n for i in range(n)]
    faces = flat_faces(d)
    m = np.zeros((len(faces), state_size(d)), dtype=np.uint8)
    for r, face in enumerate(faces):
        for t in face:
            m[r, t] ^= 1
            m[r, nxt[t]] ^= 1
    return m


@dataclass(frozen=True, eq=False)
class MovePlan:
    """Colouring-independent description of one move on one diagram.

    ``src``/``flip`` list candidate transports in order of preference; the
    new state is ``old_ext[src] ^ flip`` where ``old_ext`` is the old state
    with a constant 0 appended.  ``pushes`` are the corner flips of an R3:
    ``(a, b, c, d, targets)`` flips ``targets`` when both ``a^b`` and
    ``c^d`` are 1.
    """

    move: MoveEvent
    before: Diagram
    after: Diagram
    src: np.ndarray
    flip: np.ndarray
    pushes: tuple
    faces: np.ndarray
    old_parity: tuple[np.ndarray, np.ndarray, tuple[int, ...]]
    new_parity: tuple[np.ndarray, np.ndarray, tuple[int, ...]]


def _parity_index(d: Diagram):
    off = _offsets(d)
    cs = d.crossings
    o = [off[d.locations[c][True][0]] + d.locations[c][True][1] for c in cs]
    u = [off[d.locations[c][False][0]] + d.locations[c][False][1] for c in cs]
    return np.array(o, dtype=np.intp), np.array(u, dtype=np.intp), tuple(cs)


def _fresh(d: Diagram, n: int) -> list[int]:
    top = max(d.locations, default=0)
    return [top + 1 + j for j in range(n)]


def _ends(d: Diagram, e: EdgeId) -> tuple[int, int]:
    """Old-state indices of the colours at the two ends of an edge."""
    k, i = e
    n = len(d.components[k])
    if n == 0:
        loop = sum(len(c) for c in d.components) + k
        return loop, loop
    o = _offsets(d)[k]
    return o + i, o + (i + 1) % n


def _compile(before, m, rows, loops, candidates, pushes=()) -> MovePlan:
    """``rows``: new components as lists of (entry, ref); a ref >= 0 is an old
    state index, a ref < 0 names candidate variable ``-1 - ref``.
    ``candidates``: per option, one (old index or None, constant) per variable.
    """
    zero = state_size(before)
    after = Diagram(tuple(tuple(e for e, _ in row) for row in rows))
    size = state_size(after)
    src = np.empty((len(candidates), size), dtype=np.intp)
    flip = np.zeros((len(candidates), size), dtype=np.uint8)
    n = sum(len(r) for r in rows)
    for r, cand in enumerate(candidates):
        t = 0
        for k, row in enumerate(rows):
            start = t
            for _, ref in row:
                if ref >= 0:
                    src[r, t] = ref
                else:
                    idx, const = cand[-1 - ref]
                    src[r, t] = zero if idx is None else idx
                    flip[r, t] = const
                t += 1
            if row:
                src[r, n + k], flip[r, n + k] = src[r, start], flip[r, start]
            else:
                src[r, n + k] = loops[k]
    return MovePlan(
        m, before, after, src, flip, tuple(pushes), face_state_matrix(after),
        _parity_index(before), _parity_index(after),
    )


def _plan_delete(d: Diagram, m: MoveEvent) -> MovePlan:
    drop = set(m.crossings)
    off = _offsets(d)
    n = sum(len(c) for c in d.components)
    rows, loops = [], []
    for k, comp in enumerate(d.components):
        rows.append([(e, off[k] + i) for i, e in enumerate(comp) if e.crossing not in drop])
        # a component that loses every entry keeps the colour of its old start
        loops.append(off[k] if comp else n + k)
    return _compile(d, m, rows, loops, [()])


def _insert(d: Diagram, blocks: dict[EdgeId, list]) -> tuple[list, list]:
    off = _offsets(d)
    n = sum(len(c) for c in d.components)
    rows, loops = [], []
    for k, comp in enumerate(d.components):
        row = []
        for i, e in enumerate(comp):
            row.append((e, off[k] + i))
            row += blocks.get(EdgeId(k, i), [])
        if not comp:
            row += blocks.get(EdgeId(k, 0), [])
        rows.append(row)
        loops.append(n + k)
    return rows, loops


def _options(d: Diagram, e: EdgeId) -> list[tuple[int | None, int]]:
    a, b = _ends(d, e)
    return [(a, 0), (b, 0)]


_CONSTS = [(None, 0), (None, 1)]


def _plan_r1_add(d: Diagram, m: MoveEvent) -> MovePlan:
    (e,) = m.edges
    (c,) = _fresh(d, 1)
    block = [(Entry(c, m.over_first, m.sign), -1), (Entry(c, not m.over_first, m.sign), -1)]
    rows, loops = _insert(d, {e: block})
    # the curl face forces both passages to share a colour
    return _compile(d, m, rows, loops, [(x,) for x in _options(d, e) + _CONSTS])


def _r2_order(d: Diagram, e1: EdgeId, e2: EdgeId) -> list[tuple]:
    """Colours for the four new passages, most preferred first.

    First the curve stays off the move region (each strand's new passages
    take the colour of one end of its edge); then it may cross the new strand
    segments, including passing through the bigon.
    """
    out = [(x, x, y, y) for x in _options(d, e1) for y in _options(d, e2)]
    pats = sorted(
        itertools.product(itertools.product((0, 1), repeat=2), repeat=2),
        key=lambda p: (p[0][0] != p[0][1], p),
    )
    out += [tuple((None, b) for b in p[0] + p[1]) for p in pats]
    return out


def _plan_r2_add(d: Diagram, m: MoveEvent) -> MovePlan:
    e1, e2 = m.edges
    a, b = _fresh(d, 2)
    p = bool(m.over_first)
    first = [(Entry(a, p, m.sign), -1), (Entry(b, p, -m.sign), -2)]
    second = [Entry(a, not p, m.sign), Entry(b, not p, -m.sign)]
    if not m.parallel:
        second.reverse()
    second_rows = [(x, -3 - j) for j, x in enumerate(second)]
    if e1 == e2:
        blocks = {e1: first + second_rows}
    else:
        blocks = {e1: first, e2: second_rows}
    rows, loops = _insert(d, blocks)
    return _compile(d, m, rows, loops, _r2_order(d, e1, e2))


def _plan_r3(d: Diagram, m: MoveEvent) -> MovePlan:
    off = _offsets(d)
    sides = []
    swap = {}
    for e in m.edges:
        a, b = _ends(d, e)
        k = e.component
        comp = d.components[k]
        j = (e.position + 1) % len(comp)
        sides.append((a, b, comp[e.position].crossing, comp[j].crossing))
        swap[a], swap[b] = b, a
    pushes = []
    # a curve cutting two sides is pushed over their shared corner
    for x in range(3):
        for y in range(x + 1, 3):
            (v,) = {sides[x][2], sides[x][3]} & {sides[y][2], sides[y][3]}
            targets = tuple(off[k] + i for k, i in d.locations[v].values())
            pushes.append((sides[x][0], sides[x][1], sides[y][0], sides[y][1], targets))
    n = sum(len(c) for c in d.components)
    rows = []
    for k, comp in enumerate(d.components):
        idx = [swap.get(off[k] + i, off[k] + i) for i in range(len(comp))]
        rows.append([(d.components[k][t - off[k]], t) for t in idx])
    return _compile(d, m, rows, [n + k for k in range(d.n_components)], [()], pushes)


_PLANNERS = {
    MoveKind.R1_REMOVE: _plan_delete,
    MoveKind.R2_REMOVE: _plan_delete,
    MoveKind.R1_ADD: _plan_r1_add,
    MoveKind.R2_ADD: _plan_r2_add,
    MoveKind.R3: _plan_r3,
}


def plan_move(d: Diagram, m: MoveEvent, check: bool = True) -> MovePlan:
    if check and not is_applicable(d, m):
        raise MoveError(f"move {m} does not apply to {d}")
    return _PLANNERS[m.kind](d, m)


def transport(plan: MovePlan, states: np.ndarray, return_pick: bool = False):
    """Carry a batch of old states across the move.

    Returns the new states and a mask of rows for which some candidate was
    admissible (rows where it is False hold the last candidate's values).
    With ``return_pick`` the index of the chosen candidate is appended.
    """
    states = np.asarray(states, dtype=np.uint8)
    rows = states.shape[0]
    ext = np.concatenate([states, np.zeros((rows, 1), dtype=np.uint8)], axis=1)
    if plan.pushes:
        masks = [(ext[:, a] ^ ext[:, b]) & (ext[:, c] ^ ext[:, e]) for a, b, c, e, _ in plan.pushes]
        for mask, (*_, targets) in zip(masks, plan.pushes):
            for t in targets:
                ext[:, t] ^= mask
    cand = ext[:, plan.src] ^ plan.flip
    # uint8 arithmetic wraps modulo 256, which keeps parities intact
    ok = ~((cand @ plan.faces.T) & 1).any(axis=-1)
    found = ok.any(axis=1)
    pick = np.where(found, ok.argmax(axis=1), len(plan.src) - 1)
    if return_pick:
        return cand[np.arange(rows), pick], found, np.where(found, pick, -1)
    return cand[np.arange(rows), pick], found


def apply_move(d: Diagram, col: Colouring, m: MoveEvent) -> tuple[Diagram, Colouring]:
    """Perform ``m`` and return the new diagram with its induced colouring."""
    if col.diagram != d:
        raise ValueError("colouring belongs to a different diagram")
    report = is_admissible(d, col.weighting)
    if not report:
        raise InadmissibleError(f"input colouring is not admissible: {report!r}")
    plan = plan_move(d, m)
    new, found = transport(plan, colouring_state(col)[None, :])
    if not found[0]:
        raise InadmissibleError("no admissible transport of the colouring across the move")
    return plan.after, state_colouring(plan.after, new[0])


def batch_axiom_violations(plan: MovePlan, old: np.ndarray, new: np.ndarray) -> np.ndarray:
    """Boolean mask of rows whose transport breaks a parity axiom."""
    o0, u0, cs0 = plan.old_parity
    o1, u1, cs1 = plan.new_parity
    p0 = old[:, o0] ^ old[:, u0]
    p1 = new[:, o1] ^ new[:, u1]
    col0 = {c: j for j, c in enumerate(cs0)}
    col1 = {c: j for j, c in enumerate(cs1)}
    m = plan.move
    involved = set(involved_crossings(plan.before, plan.after, m))
    shared = [c for c in cs0 if c in col1 and c not in involved]
    bad = np.zeros(old.shape[0], dtype=bool)
    if shared:
        bad |= (p0[:, [col0[c] for c in shared]] != p1[:, [col1[c] for c in shared]]).any(axis=1)
    inv = sorted(involved)
    if m.kind in (MoveKind.R1_ADD, MoveKind.R2_ADD):
        p = p1[:, [col1[c] for c in inv]]
    else:
        p = p0[:, [col0[c] for c in inv]]
    if m.kind in (MoveKind.R1_ADD, MoveKind.R1_REMOVE):
        bad |= p[:, 0] == 1
    elif m.kind in (MoveKind.R2_ADD, MoveKind.R2_REMOVE):
        bad |= p[:, 0] != p[:, 1]
    else:
        bad |= (p != p1[:, [col1[c] for c in inv]]).any(axis=1)
        bad |= p.sum(axis=1) == 1
    return bad


class AxiomReport(NamedTuple):
    move: MoveEvent
    violations: tuple[str, ...]

    def __bool__(self) -> bool:
        return not self.violations


def involved_crossings(before: Diagram, after: Diagram, m: MoveEvent) -> tuple[int, ...]:
    if m.kind in (MoveKind.R1_ADD, MoveKind.R2_ADD):
        return tuple(sorted(set(after.locations) - set(before.locations)))
    return tuple(sorted(m.crossings))


def check_axioms(
    before: tuple[Diagram, Colouring], after: tuple[Diagram, Colouring], m: MoveEvent
) -> AxiomReport:
    """Check the four parity axioms across one move."""
    d0, c0 = before
    d1, c1 = after
    p0, p1 = parity_map(c0), parity_map(c1)
    involved = involved_crossings(d0, d1, m)
    bad = []
    for c in sorted(set(p0) & set(p1) - set(involved)):
        if p0[c] != p1[c]:
            bad.append(f"axiom 0: crossing {c} changed parity {p0[c]} -> {p1[c]}")
    if m.kind in (MoveKind.R1_ADD, MoveKind.R1_REMOVE):
        p = p1 if m.kind is MoveKind.R1_ADD else p0
        for c in involved:
            if p[c]:
                bad.append(f"axiom 1: curl crossing {c} is odd")
    elif m.kind in (MoveKind.R2_ADD, MoveKind.R2_REMOVE):
        p = p1 if m.kind is MoveKind.R2_ADD else p0
        a, b = involved
        if p[a] != p[b]:
            bad.append(f"axiom 2: crossings {a}, {b} have parities {p[a]}, {p[b]}")
    else:
        for c in involved:
            if p0[c] != p1[c]:
                bad.append(f"axiom 3: crossing {c} changed parity {p0[c]} -> {p1[c]}")
        if sum(p0[c] for c in involved) == 1:
            bad.append(f"axiom 3: exactly one odd crossing among {involved}")
    return AxiomReport(m, tuple(bad))
