import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import HOPF, TREFOIL, VIRTUAL_HOPF, VIRTUAL_TREFOIL, coloured, diagrams
from vlink.carter import genus
from vlink.gauss import change_crossings, parse, subdiagram
from vlink.generate import all_diagrams
from vlink.invariants import (
    AscendingContext,
    CapExceededError,
    ascending_contexts,
    ascending_number,
    ascending_number_oracle,
    bridge_count,
    fast_genus,
    is_ascending,
    min_genus_subdiagram,
    warping_degree,
)
from vlink.parity import project


@pytest.mark.parametrize(
    "code, bridge, asc",
    [(TREFOIL, 3, 1), (VIRTUAL_TREFOIL, 1, 0), (HOPF, 2, 1), ("", 1, 0), (";", 2, 0), (VIRTUAL_HOPF, 2, 0)],
)
def test_desk_values(code, bridge, asc):
    d = parse(code)
    assert bridge_count(d) == bridge
    assert ascending_number(d) == asc
    assert ascending_number_oracle(d) == asc


def test_warping_degree_depends_on_basepoint():
    d = parse(VIRTUAL_TREFOIL)
    assert warping_degree(d, AscendingContext((0,), (1,))) == 0
    assert warping_degree(d, AscendingContext((0,), (0,))) == 1


def test_link_order_matters():
    d = parse(VIRTUAL_HOPF)
    assert warping_degree(d, AscendingContext((0, 1), (0, 0))) == 1
    assert warping_degree(d, AscendingContext((1, 0), (0, 0))) == 0


def test_context_validation():
    d = parse(HOPF)
    for bad in (AscendingContext((0, 0), (0, 0)), AscendingContext((0, 1), (0,)), AscendingContext((0, 1), (0, 5))):
        with pytest.raises(ValueError):
            warping_degree(d, bad)


def test_context_count():
    d = parse("O1+U2+;U1+O2+O3+U3+")
    assert len(list(ascending_contexts(d))) == 2 * 2 * 4


def test_min_genus_of_virtual_trefoil():
    res = min_genus_subdiagram(parse(VIRTUAL_TREFOIL))
    assert res.minimum == 0
    assert res.witnesses == ((1,), (2,))
    assert res.subsets_checked == 4


def test_classical_diagrams_report_the_empty_witness():
    for code in (TREFOIL, HOPF, "", "O1+U1+"):
        assert min_genus_subdiagram(parse(code)).witnesses == ((),)


def test_caps_refuse():
    d = parse(TREFOIL)
    with pytest.raises(CapExceededError):
        min_genus_subdiagram(d, cap=2)
    with pytest.raises(CapExceededError):
        ascending_number_oracle(d, cap=2)


def test_witnesses_are_inclusion_minimal_and_complete():
    for d in all_diagrams(3, 2):
        res = min_genus_subdiagram(d, threads=1)
        attain = [
            set(A)
            for r in range(d.n_crossings + 1)
            for A in itertools.combinations(d.crossings, r)
            if genus(subdiagram(d, A)).total == res.minimum
        ]
        minimal = sorted(tuple(sorted(A)) for A in attain if not any(B < A for B in attain))
        assert list(res.witnesses) == minimal


def test_parallel_search_matches_serial():
    d = parse("O1+U2+O3-U4+U1+O2+U3-O4+O5-U5-")
    assert min_genus_subdiagram(d, threads=1) == min_genus_subdiagram(d, threads=2)


@given(diagrams(6, 3))
def test_fast_genus_matches_carter(d):
    assert fast_genus(d) == genus(d).total


@given(diagrams(6, 2), st.data())
def test_monotone_under_virtualization(d, data):
    A = data.draw(st.sets(st.sampled_from(d.crossings))) if d.crossings else set()
    s = subdiagram(d, A)
    assert bridge_count(s) <= bridge_count(d)
    assert ascending_number(s) <= ascending_number(d)
    assert min_genus_subdiagram(d).minimum <= genus(d).total


@given(diagrams(6, 2), st.data())
def test_bridge_and_ascending_ignore_signs(d, data):
    flip = data.draw(st.sets(st.sampled_from(d.crossings))) if d.crossings else set()
    from vlink.gauss import Diagram, Entry

    e = Diagram(tuple(tuple(Entry(x.crossing, x.over, -x.sign if x.crossing in flip else x.sign) for x in c)
                      for c in d.components))
    assert bridge_count(e) == bridge_count(d)
    assert ascending_number(e) == ascending_number(d)


@given(diagrams(6, 2))
def test_ascending_zero_iff_some_context_is_ascending(d):
    assert (ascending_number(d) == 0) == is_ascending(d)


@given(diagrams(6, 2))
def test_changing_everything_reverses_first_encounters(d):
    # each context's degree under a global crossing change is the complement
    all_ = change_crossings(d, d.crossings)
    for ctx in itertools.islice(ascending_contexts(d), 8):
        assert warping_degree(all_, ctx) == d.n_crossings - warping_degree(d, ctx)


@given(coloured(6, 2))
def test_projection_does_not_lower_the_floor(dc):
    d, col = dc
    assert min_genus_subdiagram(project(d, col)).minimum <= min_genus_subdiagram(d).minimum


@pytest.mark.slow
def test_oracle_agrees_on_all_small_shapes(five_crossing_shapes):
    for d in five_crossing_shapes:
        assert ascending_number_oracle(d) == ascending_number(d), str(d)
