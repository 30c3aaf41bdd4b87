"""Exhaustive parity-axiom sweep over small diagrams.

Removals and R3 go through :func:`vlink.moves.transport` one move at a
time.  Additions are far more numerous, so all R1/R2 additions of a diagram
are evaluated together: every colouring is a bit in a row-bitset, the colour
at each strand position is one bitset, and face sums become XORs of
bitsets.  The candidate order and tie-breaking are the same as in
:mod:`vlink.moves`, which the test suite checks row by row.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from .gauss import Diagram
from .generate import all_diagrams
from .moves import (
    MoveEvent,
    MoveKind,
    _offsets,
    _r2_order,
    available_moves,
    batch_axiom_violations,
    colouring_states,
    plan_move,
    transport,
)

__all__ = ["SweepReport", "addition_outcomes", "sweep", "sweep_diagram"]


@dataclass
class SweepReport:
    diagrams: int = 0
    move_instances: int = 0
    checked: int = 0  # (diagram, colouring, move) triples with a transported colouring
    violations: int = 0
    untransportable: int = 0
    by_kind: dict = field(default_factory=dict)
    examples: list = field(default_factory=list)
    seconds: float = 0.0

    def bump(self, kind: str, checked: int, bad: int, stuck: int) -> None:
        row = self.by_kind.setdefault(kind, {"checked": 0, "violations": 0, "untransportable": 0})
        row["checked"] += checked
        row["violations"] += bad
        row["untransportable"] += stuck
        self.checked += checked
        self.violations += bad
        self.untransportable += stuck

    def to_json(self) -> dict:
        return asdict(self)


def _bitsets(states: np.ndarray) -> np.ndarray:
    """Column bitsets of a state matrix, plus an all-0 and an all-1 column."""
    rows, width = states.shape
    words = max(1, -(-rows // 64))
    cols = np.concatenate(
        [states.T, np.zeros((1, rows), np.uint8), np.ones((1, rows), np.uint8)]
    ).astype(np.uint8)
    packed = np.packbits(cols, axis=1, bitorder="little")
    out = np.zeros((width + 2, words * 8), np.uint8)
    out[:, : packed.shape[1]] = packed
    return out.view(np.uint64)


def _popcount(x: np.ndarray) -> int:
    return int(np.bitwise_count(x).sum())


class _Layout:
    """Flat description of the diagram every addition starts from."""

    def __init__(self, d: Diagram):
        self.d = d
        comps = d.components
        self.lengths = np.array([len(c) for c in comps], dtype=np.intp)
        self.off = np.array(_offsets(d), dtype=np.intp)
        self.n = int(self.lengths.sum())
        flat = [e for c in comps for e in c]
        pos = {(e.crossing, e.over): t for t, e in enumerate(flat)}
        self.partner = np.array([pos[(e.crossing, not e.over)] for e in flat], dtype=np.intp)
        self.over = np.array([e.over for e in flat], dtype=bool)
        self.plus = np.array([e.sign > 0 for e in flat], dtype=bool)
        self.comp = np.repeat(np.arange(len(comps)), self.lengths)
        edges = d.edges
        self.edges = edges
        ins, ends, ecomp = [], [], []
        for k, i in edges:
            n = len(comps[k])
            o = int(self.off[k])
            if n:
                ins.append(o + i + 1)
                ends.append((o + i, o + (i + 1) % n))
            else:
                ins.append(o)
                ends.append((self.n + k, self.n + k))
            ecomp.append(k)
        self.ins = np.array(ins, dtype=np.intp)
        self.ends = np.array(ends, dtype=np.intp).reshape(len(edges), 2)
        self.ecomp = np.array(ecomp, dtype=np.intp)


def _insertions(lay: _Layout, points: np.ndarray, comps: np.ndarray):
    """New flat arrays for moves inserting 2-entry blocks at ``points``.

    ``points``/``comps``: (M, B), sorted along B.  Returns the new position of
    every old entry, the positions of the block entries (M, 2B), the new
    component of each position and the successor map along components.
    """
    m, b = points.shape
    n2 = lay.n + 2 * b
    t = np.arange(lay.n)
    newpos = t[None, :] + 2 * (points[:, :, None] <= t[None, None, :]).sum(axis=1)
    vpos = (points + 2 * np.arange(b)[None, :])[:, :, None] + np.arange(2)[None, None, :]
    vpos = vpos.reshape(m, 2 * b)
    rows = np.arange(m)[:, None]
    comp = np.empty((m, n2), dtype=np.intp)
    comp[rows, newpos] = lay.comp[None, :]
    comp[rows, vpos] = np.repeat(comps, 2, axis=1)
    ncomp = len(lay.lengths)
    lens = np.zeros((m, ncomp), dtype=np.intp) + lay.lengths[None, :]
    np.add.at(lens, (np.repeat(np.arange(m), b), comps.reshape(-1)), 2)
    offs = np.cumsum(lens, axis=1) - lens
    j = np.arange(n2)[None, :]
    start = np.take_along_axis(offs, comp, axis=1)
    end = start + np.take_along_axis(lens, comp, axis=1)
    nxt = np.where(j + 1 < end, j + 1, start)
    return newpos, vpos, nxt


def _faces_incidence(nxt, partner, over, plus):
    """Per move, (2N' x N') mod-2 incidence of face labels with state positions."""
    m, n2 = nxt.shape
    rows = np.arange(m)[:, None]
    prv = np.empty_like(nxt)
    prv[rows, nxt] = np.arange(n2)[None, :]
    # half-edge 2j is the in-end of position j, 2j + 1 its out-end
    pair = np.empty((m, 2 * n2), dtype=np.intp)
    pair[:, 1::2] = 2 * nxt
    pair[:, 0::2] = 2 * prv + 1
    same = over == plus
    succ = np.empty_like(pair)
    succ[:, 1::2] = 2 * partner + same
    succ[:, 0::2] = 2 * partner + ~same
    phi = np.take_along_axis(succ, pair, axis=1)
    lab = np.broadcast_to(np.arange(2 * n2), (m, 2 * n2)).copy()
    jump = phi
    steps = max(1, int(np.ceil(np.log2(2 * n2))) + 1)
    for _ in range(steps):
        lab = np.minimum(lab, np.take_along_axis(lab, jump, axis=1))
        jump = np.take_along_axis(jump, jump, axis=1)
    h = np.arange(2 * n2)
    tail = np.where(h % 2 == 1, h // 2, prv[:, h // 2])
    head = np.take_along_axis(nxt, tail, axis=1)
    base = (np.arange(m)[:, None] * (2 * n2) + lab) * n2
    keys = np.concatenate([(base + tail).ravel(), (base + head).ravel()])
    inc = np.bincount(keys, minlength=m * 2 * n2 * n2) & 1
    return inc.reshape(m, 2 * n2, n2).astype(bool)


def _xor_reduce(mask: np.ndarray, vals: np.ndarray, axis: int) -> np.ndarray:
    return np.bitwise_xor.reduce(np.where(mask[..., None], vals, np.uint64(0)), axis=axis)


@dataclass
class _Outcome:
    moves: list[MoveEvent]
    chosen: np.ndarray  # (M, ncand, W) bitsets of rows that took each candidate
    uncovered: np.ndarray  # (M, W)
    violating: np.ndarray  # (M, W)


def _additions(lay: _Layout, bits: np.ndarray, kind: MoveKind) -> _Outcome | None:
    d = lay.d
    ne = len(lay.edges)
    if kind is MoveKind.R1_ADD:
        grid = list(itertools.product(range(ne), (True, False), (1, -1)))
        e_idx = np.array([g[0] for g in grid], dtype=np.intp)[:, None]
    else:
        grid = [
            (e1, e2, of, par, s)
            for e1, e2 in itertools.combinations_with_replacement(range(ne), 2)
            for of in (True, False)
            for par in (True, False)
            for s in (1, -1)
        ]
        e_idx = np.array([g[:2] for g in grid], dtype=np.intp).reshape(len(grid), 2)
    if not grid:
        return None
    m = len(grid)
    par = None
    of = np.array([g[-2] if kind is MoveKind.R1_ADD else g[2] for g in grid])
    sg = np.array([g[-1] for g in grid]) > 0
    points = lay.ins[e_idx]
    newpos, vpos, nxt = _insertions(lay, points, lay.ecomp[e_idx])
    n2 = nxt.shape[1]
    rows = np.arange(m)[:, None]
    partner = np.empty((m, n2), dtype=np.intp)
    over = np.empty((m, n2), dtype=bool)
    plus = np.empty((m, n2), dtype=bool)
    src = np.full((m, n2), bits.shape[0] - 2, dtype=np.intp)  # var slots read the 0 column
    partner[rows, newpos] = newpos[rows, lay.partner[None, :]]
    over[rows, newpos] = lay.over[None, :]
    plus[rows, newpos] = lay.plus[None, :]
    src[rows, newpos] = np.arange(lay.n)[None, :]
    if kind is MoveKind.R1_ADD:
        partner[rows, vpos] = vpos[:, ::-1]
        over[rows, vpos] = np.stack([of, ~of], axis=1)
        plus[rows, vpos] = sg[:, None]
    else:
        par = np.array([g[3] for g in grid])
        # block 2 holds (a, b) when parallel and (b, a) otherwise
        mate0 = np.where(par, 2, 3)
        mate1 = np.where(par, 3, 2)
        vp = np.empty((m, 4), dtype=np.intp)
        vp[:, 0] = np.take_along_axis(vpos, mate0[:, None], 1)[:, 0]
        vp[:, 1] = np.take_along_axis(vpos, mate1[:, None], 1)[:, 0]
        vp[np.arange(m), mate0] = vpos[:, 0]
        vp[np.arange(m), mate1] = vpos[:, 1]
        partner[rows, vpos] = vp
        over[rows, vpos] = np.stack([of, of, ~of, ~of], axis=1)
        sa, sb = sg, ~sg
        plus[rows, vpos] = np.stack(
            [sa, sb, np.where(par, sa, sb), np.where(par, sb, sa)], axis=1
        )
    inc = _faces_incidence(nxt, partner, over, plus)
    # face labels are sparse in 0..2N'; keep only rows that meet some edge
    live = inc.any(axis=2)
    order = np.argsort(~live, axis=1, kind="stable")[:, : int(live.sum(axis=1).max())]
    inc = np.take_along_axis(inc, order[..., None], axis=1)
    fixed = bits[src]  # (M, N', W)
    base = _xor_reduce(inc, fixed[:, None, :, :], axis=2)  # (M, 2N', W)
    incv = np.take_along_axis(inc, vpos[:, None, :].repeat(inc.shape[1], axis=1), axis=2)
    touched = incv.any(axis=2)
    ones = bits[-1]
    common = np.bitwise_and.reduce(np.where(touched[..., None], ones, ~base), axis=1)

    # candidate values per variable, as indices into ``bits``
    zero_col, one_col = bits.shape[0] - 2, bits.shape[0] - 1
    ends = lay.ends[e_idx]  # (M, B, 2)
    if kind is MoveKind.R1_ADD:
        opts = [ends[:, 0, 0], ends[:, 0, 1]]
        cand = [np.stack([o, o], axis=1) for o in opts]
        cand += [np.full((m, 2), c) for c in (zero_col, one_col)]
    else:
        cand = []
        for x in range(2):
            for y in range(2):
                a, b = ends[:, 0, x], ends[:, 1, y]
                cand.append(np.stack([a, a, b, b], axis=1))
        for pattern in _r2_order(d, lay.edges[0], lay.edges[0])[4:]:
            cols = [one_col if const else zero_col for _, const in pattern]
            cand.append(np.tile(np.array(cols, dtype=np.intp), (m, 1)))
    valsrc = np.stack(cand, axis=1)  # (M, C, V)
    nt = int(touched.sum(axis=1).max())
    pick = np.argsort(~touched, axis=1, kind="stable")[:, :nt]
    tb = np.take_along_axis(base, pick[..., None], axis=1)  # (M, T, W)
    ti = np.take_along_axis(incv, pick[..., None], axis=1)  # (M, T, V)
    tt = np.take_along_axis(touched, pick, axis=1)  # (M, T)

    # parity axioms on the old crossings do not depend on the candidate
    old_par = bits[np.arange(lay.n)] ^ bits[lay.partner]  # (N, W)
    new_fixed = fixed ^ np.take_along_axis(fixed, partner[..., None], axis=1)
    newpar_old = np.take_along_axis(new_fixed, newpos[..., None], axis=1)  # (M, N, W)
    viol0 = np.bitwise_or.reduce(newpar_old ^ old_par[None], axis=1, initial=np.uint64(0))

    def evaluate(sel, c0, c1):
        """Admissible rows and axiom violations for candidates c0:c1 of moves sel."""
        vals = bits[valsrc[sel, c0:c1]]  # (S, C, V, W)
        form = tb[sel, None] ^ _xor_reduce(
            ti[sel, None].repeat(vals.shape[1], axis=1), vals[:, :, None], axis=3
        )
        ok = np.where(tt[sel, None, :, None], ~form, ones)
        adm = np.bitwise_and.reduce(ok, axis=2) & common[sel, None, :] & ones
        if kind is MoveKind.R1_ADD:
            extra = vals[:, :, 0] ^ vals[:, :, 1]
        else:
            p = par[sel, None, None]
            pa = vals[:, :, 0] ^ np.where(p, vals[:, :, 2], vals[:, :, 3])
            pb = vals[:, :, 1] ^ np.where(p, vals[:, :, 3], vals[:, :, 2])
            extra = pa ^ pb
        return adm, viol0[sel, None, :] | extra

    # the end-copying candidates usually cover every row; constants are
    # only evaluated for moves that still have uncovered rows
    npref = 2 if kind is MoveKind.R1_ADD else 4
    ncand = valsrc.shape[1]
    allm = np.arange(m)
    adm = np.zeros((m, ncand) + ones.shape, dtype=np.uint64)
    viol = np.zeros_like(adm)
    adm[:, :npref], viol[:, :npref] = evaluate(allm, 0, npref)
    left = ones & ~np.bitwise_or.reduce(adm[:, :npref], axis=1)
    need = np.flatnonzero(left.any(axis=1))
    if need.size:
        adm[need, npref:], viol[need, npref:] = evaluate(need, npref, ncand)

    covered = np.zeros_like(ones)[None].repeat(m, 0)
    chosen = np.empty_like(adm)
    for c in range(adm.shape[1]):
        chosen[:, c] = adm[:, c] & ~covered
        covered |= adm[:, c]
    violating = np.bitwise_or.reduce(chosen & viol, axis=1)
    moves = []
    for g in grid:
        if kind is MoveKind.R1_ADD:
            moves.append(MoveEvent(kind, (), (lay.edges[g[0]],), over_first=g[1], sign=g[2]))
        else:
            moves.append(
                MoveEvent(kind, (), (lay.edges[g[0]], lay.edges[g[1]]), over_first=g[2], parallel=g[3], sign=g[4])
            )
    return _Outcome(moves, chosen, ones & ~covered, violating)


def addition_outcomes(d: Diagram, states: np.ndarray | None = None) -> dict[MoveEvent, tuple[np.ndarray, np.ndarray]]:
    """For every addition move: per-row chosen candidate (-1 if none) and
    per-row violation flags, evaluated with the bitset engine."""
    if states is None:
        states = colouring_states(d)
    lay = _Layout(d)
    bits = _bitsets(states)
    rows = states.shape[0]
    out = {}
    for kind in (MoveKind.R1_ADD, MoveKind.R2_ADD):
        res = _additions(lay, bits, kind)
        if res is None:
            continue
        chosen = np.unpackbits(res.chosen.view(np.uint8), axis=-1, bitorder="little")[..., :rows]
        bad = np.unpackbits(res.violating.view(np.uint8), axis=-1, bitorder="little")[..., :rows]
        for i, mv in enumerate(res.moves):
            hit = chosen[i].astype(bool)
            pick = np.where(hit.any(axis=0), hit.argmax(axis=0), -1)
            out[mv] = (pick, bad[i].astype(bool))
    return out


def sweep_diagram(d: Diagram, report: SweepReport, keep_examples: int = 5) -> None:
    states = colouring_states(d)
    report.diagrams += 1
    for m in available_moves(d, additions=False):
        plan = plan_move(d, m, check=False)
        new, found = transport(plan, states)
        bad = batch_axiom_violations(plan, states[found], new[found])
        report.move_instances += 1
        report.bump(m.kind.value, int(found.sum()), int(bad.sum()), int((~found).sum()))
        if bad.any() and len(report.examples) < keep_examples:
            report.examples.append({"diagram": str(d), "move": m.to_json()})
    lay = _Layout(d)
    bits = _bitsets(states)
    for kind in (MoveKind.R1_ADD, MoveKind.R2_ADD):
        res = _additions(lay, bits, kind)
        if res is None:
            continue
        stuck = _popcount(res.uncovered)
        nbad = _popcount(res.violating)
        report.move_instances += len(res.moves)
        report.bump(kind.value, len(res.moves) * states.shape[0] - stuck, nbad, stuck)
        if nbad and len(report.examples) < keep_examples:
            i = int(np.flatnonzero(np.bitwise_count(res.violating).sum(axis=1))[0])
            report.examples.append({"diagram": str(d), "move": res.moves[i].to_json()})


def sweep(max_crossings: int, max_components: int) -> SweepReport:
    """Check the parity axioms for every move on every small diagram and
    every colouring of it."""
    report = SweepReport()
    t0 = time.perf_counter()
    for d in all_diagrams(max_crossings, max_components):
        sweep_diagram(d, report)
    report.seconds = time.perf_counter() - t0
    return report
