import pytest
from hypothesis import given

from conftest import TREFOIL, VIRTUAL_TREFOIL, coloured
from vlink.carter import genus
from vlink.cover import build_double_cover, preferred_lift, verify_lift_oracle
from vlink.gauss import EdgeId, canonical_code, parse
from vlink.parity import Colouring, InadmissibleError, Weighting, project
from vlink.generate import all_colourings


@pytest.mark.parametrize("code", [TREFOIL, VIRTUAL_TREFOIL, "O1+U2+;U1+O2+", "", ";"])
def test_lift_equals_projection_for_every_colouring(code):
    d = parse(code)
    for col in all_colourings(d):
        chk = verify_lift_oracle(d, col)
        assert chk, chk.diff()


def test_trivial_weighting_gives_two_copies():
    d = parse(VIRTUAL_TREFOIL)
    cov = build_double_cover(d, Weighting.zero())
    assert cov.n_connected() == 2
    assert cov.euler == 2 * genus(d).euler


def test_inadmissible_weighting_is_refused():
    d = parse(VIRTUAL_TREFOIL)
    with pytest.raises(InadmissibleError):
        build_double_cover(d, Weighting(frozenset({EdgeId(0, 0)})))


def test_lift_rejects_foreign_colouring():
    col = Colouring(parse(TREFOIL), Weighting.zero(), (0,))
    with pytest.raises(ValueError):
        preferred_lift(parse(VIRTUAL_TREFOIL), col)


@given(coloured(6, 2))
def test_cover_is_unbranched(dc):
    d, col = dc
    cov = build_double_cover(d, col.weighting)
    # an unbranched double cover doubles the Euler characteristic
    assert cov.euler == 2 * genus(d).euler
    assert cov.n_vertices == 2 * d.n_crossings


@given(coloured(6, 2))
def test_lift_oracle_random(dc):
    d, col = dc
    chk = verify_lift_oracle(d, col)
    assert chk, chk.diff()
    assert chk.lift_code == canonical_code(project(d, col))
