import random

from conftest import coloured
from hypothesis import given
from vlink.fuzz import fuzz, projection_commutes, random_move
from vlink.gauss import parse
from vlink.moves import MoveKind, apply_move
from vlink.parity import InadmissibleError

HARD = ("axioms", "admissibility", "genus_r1_r3", "genus_r2", "commutation")


def strip(rep):
    doc = rep.to_json()
    doc.pop("seconds")
    return doc


def test_reports_are_deterministic():
    assert strip(fuzz(3, 400, 6)) == strip(fuzz(3, 400, 6))
    assert strip(fuzz(3, 400, 6)) != strip(fuzz(4, 400, 6))


def test_worker_count_does_not_change_the_report():
    assert strip(fuzz(9, 300, 6, threads=1)) == strip(fuzz(9, 300, 6, threads=2))


def test_hard_checks_pass_on_a_short_walk():
    rep = fuzz(1, 1500, 7)
    assert rep.steps == 1500
    assert sum(rep.moves_by_kind.values()) == 1500
    for k in HARD:
        assert rep.checks[k].failures == 0, rep.checks[k].examples
    assert set(rep.moves_by_kind) == {k.value for k in MoveKind}


def test_step_budget_is_split_across_streams():
    rep = fuzz(0, 13, 4, streams=5)
    assert rep.steps == 13 and rep.streams == 5


def test_random_move_respects_the_crossing_bound():
    rng = random.Random(0)
    d = parse("O1+U1+O2-U2-")
    for _ in range(200):
        m = random_move(d, rng, 2)
        assert m.kind not in (MoveKind.R1_ADD, MoveKind.R2_ADD)
    assert random_move(parse(""), rng, 0) is None


@given(coloured(6, 2))
def test_projection_commutes_with_every_move(dc):
    d, col = dc
    rng = random.Random(str(d))
    for _ in range(5):
        m = random_move(d, rng, 8)
        if m is None:
            return
        try:
            d1, c1 = apply_move(d, col, m)
        except InadmissibleError:
            continue
        assert projection_commutes(d, col, d1, c1, m) is None
        d, col = d1, c1


def test_commutation_with_two_triangles_on_one_triple():
    from vlink.moves import MoveEvent, r3_sites
    from vlink.parity import Colouring, Weighting

    d = parse("U1+U2-U3+O1+O2-O3+;")
    col = Colouring(d, Weighting.zero(), (0, 0))
    sites = r3_sites(d)
    assert len(sites) == 2 and sites[0][0] == sites[1][0]
    for cs, sides in sites:
        m = MoveEvent(MoveKind.R3, cs, sides)
        d1, c1 = apply_move(d, col, m)
        assert projection_commutes(d, col, d1, c1, m) is None
