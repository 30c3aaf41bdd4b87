"""Seeded random walks through move space with property checks at every step.

Each stream starts from a random coloured diagram and applies random moves,
restarting from a fresh diagram every ``restart_every`` steps.  Streams are
deterministic given ``(seed, stream index)`` and are merged in index order,
so reports do not depend on how many workers ran them.
"""
from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field

from ._parallel import pmap, worker_count
from .carter import genus, surface_signature
from .gauss import Diagram, subdiagram
from .generate import random_colouring, random_diagram
from .moves import (
    MoveEvent,
    MoveKind,
    apply_move,
    check_axioms,
    involved_crossings,
    r1_sites,
    r2_sites,
    r3_sites,
)
from .parity import (
    Colouring,
    InadmissibleError,
    is_admissible,
    parity_map,
    project,
    project_colouring,
)

__all__ = ["Check", "FuzzReport", "fuzz", "run_stream", "random_move", "projection_commutes"]

_EXAMPLES = 3


@dataclass
class Check:
    checked: int = 0
    failures: int = 0
    examples: list = field(default_factory=list)

    def record(self, ok: bool, example=None) -> None:
        self.checked += 1
        if not ok:
            self.failures += 1
            if example is not None and len(self.examples) < _EXAMPLES:
                self.examples.append(example)

    def merge(self, other: "Check") -> None:
        self.checked += other.checked
        self.failures += other.failures
        room = _EXAMPLES - len(self.examples)
        self.examples += other.examples[: max(0, room)]


_CHECKS = (
    "axioms",
    "admissibility",
    "genus_r1_r3",
    "genus_r2",
    "r2_even_projected_genus",
    "r2_even_projected_genus_same_surface",
    "commutation",
)


@dataclass
class FuzzReport:
    schema: str = "vlink.fuzz/1"
    seed: int = 0
    steps: int = 0
    max_crossings: int = 0
    max_components: int = 0
    streams: int = 0
    moves_by_kind: dict = field(default_factory=dict)
    untransportable: int = 0
    checks: dict = field(default_factory=lambda: {k: Check() for k in _CHECKS})
    seconds: float = 0.0

    def merge(self, other: "FuzzReport") -> None:
        self.steps += other.steps
        for k, v in other.moves_by_kind.items():
            self.moves_by_kind[k] = self.moves_by_kind.get(k, 0) + v
        self.untransportable += other.untransportable
        for k in _CHECKS:
            self.checks[k].merge(other.checks[k])

    @property
    def axioms_ok(self) -> bool:
        return all(self.checks[k].failures == 0 for k in ("axioms", "admissibility"))

    def to_json(self) -> dict:
        out = asdict(self)
        out["checks"] = {k: asdict(v) for k, v in self.checks.items()}
        return out


def random_move(d: Diagram, rng: random.Random, max_crossings: int) -> MoveEvent | None:
    """Pick a move kind uniformly among those available, then an instance."""
    n = d.n_crossings
    edges = d.edges
    options = []
    r1 = r1_sites(d)
    r2 = r2_sites(d)
    r3 = r3_sites(d)
    if r1:
        options.append(lambda: MoveEvent(MoveKind.R1_REMOVE, (rng.choice(r1),)))
    if r2:
        options.append(lambda: MoveEvent(MoveKind.R2_REMOVE, rng.choice(r2)))
    if r3:
        options.append(lambda: MoveEvent(MoveKind.R3, *rng.choice(r3)))
    if n + 1 <= max_crossings:
        options.append(
            lambda: MoveEvent(
                MoveKind.R1_ADD, (), (rng.choice(edges),),
                over_first=rng.random() < 0.5, sign=rng.choice((1, -1)),
            )
        )
    if n + 2 <= max_crossings:
        options.append(
            lambda: MoveEvent(
                MoveKind.R2_ADD, (), tuple(sorted((rng.choice(edges), rng.choice(edges)))),
                over_first=rng.random() < 0.5, parallel=rng.random() < 0.5,
                sign=rng.choice((1, -1)),
            )
        )
    if not options:
        return None
    return rng.choice(options)()


def _same_cyclic(a: Diagram, b: Diagram) -> bool:
    """Equal up to rotating each component (component order is kept)."""
    if a.n_components != b.n_components:
        return False
    for x, y in zip(a.components, b.components):
        if len(x) != len(y):
            return False
        if x and not any(x[i:] + x[:i] == y for i in range(len(x))):
            return False
    return True


def projection_commutes(
    d0: Diagram, c0: Colouring, d1: Diagram, c1: Colouring, m: MoveEvent
) -> str | None:
    """None when the projections are related by the projected move (or are
    equal); otherwise a short reason."""
    p0, p1 = project(d0, c0), project(d1, c1)
    inv = involved_crossings(d0, d1, m)
    if m.kind is MoveKind.R3:
        par = parity_map(c0)
        if any(par[c] for c in inv):
            return None if _same_cyclic(p0, p1) else "odd R3 changed the projection"
        pc = project_colouring(c0)
        # a crossing triple can bound two triangles; edge ids shift under
        # projection, so accept either
        sites = [s for s in r3_sites(p0) if s[0] == tuple(sorted(inv))]
        if not sites:
            return "even R3 triangle missing from the projection"
        for cs, sides in sites:
            q, _ = apply_move(p0, pc, MoveEvent(MoveKind.R3, cs, sides))
            if _same_cyclic(q, p1):
                return None
        return "projected R3 gives a different diagram"
    adding = m.kind in (MoveKind.R1_ADD, MoveKind.R2_ADD)
    big, small, par = (p1, p0, parity_map(c1)) if adding else (p0, p1, parity_map(c0))
    bits = {par[c] for c in inv}
    if bits == {1}:
        return None if _same_cyclic(p0, p1) else "odd pair changed the projection"
    if bits != {0}:
        return "involved crossings have mixed parity"
    if m.kind in (MoveKind.R1_ADD, MoveKind.R1_REMOVE):
        if inv[0] not in r1_sites(big):
            return "curl is not an R1 site after projection"
    elif tuple(sorted(inv)) not in r2_sites(big):
        return "pair is not an R2 site after projection"
    return None if _same_cyclic(subdiagram(big, inv), small) else "projected move mismatch"


def _step_checks(rep: FuzzReport, d0, c0, d1, c1, m: MoveEvent) -> None:
    ex = {"diagram": str(d0), "base": list(c0.base), "weighting": c0.weighting.to_json(), "move": m.to_json()}
    ax = check_axioms((d0, c0), (d1, c1), m)
    rep.checks["axioms"].record(bool(ax), {**ex, "violations": list(ax.violations)})
    rep.checks["admissibility"].record(bool(is_admissible(d1, c1.weighting)), ex)
    g0, g1 = genus(d0).total, genus(d1).total
    if m.kind in (MoveKind.R2_ADD, MoveKind.R2_REMOVE):
        rep.checks["genus_r2"].record(abs(g0 - g1) <= 1, {**ex, "genus": [g0, g1]})
        par = parity_map(c1 if m.kind is MoveKind.R2_ADD else c0)
        if not any(par[c] for c in involved_crossings(d0, d1, m)):
            q0, q1 = genus(project(d0, c0)).total, genus(project(d1, c1)).total
            detail = {**ex, "projected_genus": [q0, q1], "genus": [g0, g1]}
            rep.checks["r2_even_projected_genus"].record(q0 == q1, detail)
            if surface_signature(d0) == surface_signature(d1):
                rep.checks["r2_even_projected_genus_same_surface"].record(q0 == q1, detail)
    else:
        rep.checks["genus_r1_r3"].record(g0 == g1, {**ex, "genus": [g0, g1]})
    why = projection_commutes(d0, c0, d1, c1, m)
    rep.checks["commutation"].record(why is None, {**ex, "reason": why})


def run_stream(args: tuple) -> FuzzReport:
    seed, stream, steps, max_crossings, max_components, restart_every = args
    rng = random.Random(f"vlink-fuzz:{seed}:{stream}")
    rep = FuzzReport(seed=seed, max_crossings=max_crossings, max_components=max_components)

    def fresh():
        d = random_diagram(rng.getrandbits(32), max_crossings, max_components)
        return d, random_colouring(d, rng)

    d, col = fresh()
    since = 0
    stuck = 0
    while rep.steps < steps:
        m = random_move(d, rng, max_crossings) if since < restart_every and stuck < 16 else None
        if m is None:
            d, col = fresh()
            since = stuck = 0
            continue
        try:
            d1, c1 = apply_move(d, col, m)
        except InadmissibleError:
            # the curve runs through a handle the move destroys
            rep.untransportable += 1
            stuck += 1
            continue
        _step_checks(rep, d, col, d1, c1, m)
        rep.moves_by_kind[m.kind.value] = rep.moves_by_kind.get(m.kind.value, 0) + 1
        rep.steps += 1
        d, col = d1, c1
        since += 1
        stuck = 0
    return rep


def fuzz(
    seed: int,
    steps: int,
    max_crossings: int,
    max_components: int = 2,
    streams: int = 8,
    restart_every: int = 64,
    threads: int | None = None,
) -> FuzzReport:
    t0 = time.perf_counter()
    streams = max(1, streams)
    jobs = [
        (seed, i, steps // streams + (i < steps % streams), max_crossings, max_components, restart_every)
        for i in range(streams)
    ]
    out = FuzzReport(seed=seed, max_crossings=max_crossings, max_components=max_components, streams=streams)
    for part in pmap(run_stream, jobs, worker_count() if threads is None else threads):
        out.merge(part)
    out.seconds = time.perf_counter() - t0
    return out
