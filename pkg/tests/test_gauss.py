import pytest
from hypothesis import given

from conftest import HOPF, TREFOIL, VIRTUAL_TREFOIL, diagrams
from vlink.gauss import (
    Diagram,
    EdgeId,
    Entry,
    GaussCodeSyntaxError,
    InvalidDiagramError,
    UnknownCrossingError,
    canonical_code,
    canonical_relabel,
    change_crossings,
    crossing_change,
    parse,
    serialize,
    subdiagram,
    validate,
)


@pytest.mark.parametrize(
    "code, comps, crossings",
    [("", 1, 0), (";", 2, 0), (VIRTUAL_TREFOIL, 1, 2), (TREFOIL, 1, 3), (HOPF, 2, 2), ("O1+;U1+", 2, 1)],
)
def test_parse_shapes(code, comps, crossings):
    d = parse(code)
    assert d.n_components == comps
    assert d.n_crossings == crossings
    assert serialize(d) == code


def test_whitespace_is_ignored():
    assert parse(" O1 + U1 + ") == parse("O1+U1+")


@pytest.mark.parametrize("code, pos", [("X1+", 0), ("O+", 1), ("O1", 2), ("O1+U1*", 5), ("O0+U0+", 1)])
def test_syntax_errors_carry_offsets(code, pos):
    with pytest.raises(GaussCodeSyntaxError) as info:
        parse(code)
    assert info.value.position == pos


@pytest.mark.parametrize(
    "code, fragment",
    [
        ("O1+", "crossing 1: occurs 1 times"),
        ("O1+O1+", "crossing 1: lacks an Under passage"),
        ("U1+U1+", "crossing 1: lacks an Over passage"),
        ("O1+U1-", "crossing 1: sign mismatch"),
        ("O1+U1+O1+", "crossing 1: occurs 3 times"),
    ],
)
def test_invalid_diagrams_list_violations(code, fragment):
    with pytest.raises(InvalidDiagramError) as info:
        parse(code)
    assert any(fragment in v for v in info.value.violations)


def test_edges_include_loop_of_empty_component():
    d = parse("O1+U1+;")
    assert d.edges == (EdgeId(0, 0), EdgeId(0, 1), EdgeId(1, 0))


def test_subdiagram_and_unknown_crossing():
    d = parse(VIRTUAL_TREFOIL)
    assert serialize(subdiagram(d, [1])) == "U2+O2+"
    assert subdiagram(d, []) is d
    with pytest.raises(UnknownCrossingError):
        subdiagram(d, [7])


def test_crossing_change_example():
    assert serialize(crossing_change(parse("O1+U1+"), 1)) == "U1-O1-"


def test_canonical_relabel_orders_by_first_visit():
    assert canonical_code(parse("U7-O3+O7-U3+")) == "U1-O2+O1-U2+"


@given(diagrams())
def test_roundtrip(d):
    assert parse(serialize(d)) == d
    assert validate(d) == []


@given(diagrams())
def test_crossing_change_is_an_involution(d):
    for c in d.crossings:
        assert crossing_change(crossing_change(d, c), c) == d
    assert change_crossings(change_crossings(d, d.crossings), d.crossings) == d


@given(diagrams())
def test_canonical_relabel_is_idempotent(d):
    r = canonical_relabel(d)
    assert canonical_relabel(r) == r
    assert sorted(r.crossings) == list(range(1, d.n_crossings + 1))


@given(diagrams())
def test_subdiagram_composes(d):
    cs = d.crossings
    a, b = cs[: len(cs) // 2], cs[len(cs) // 2 :]
    assert subdiagram(subdiagram(d, a), b) == subdiagram(d, cs)
    assert subdiagram(d, cs).n_crossings == 0


def test_diagram_requires_a_component():
    with pytest.raises(ValueError):
        Diagram(())


def test_entry_text():
    assert str(Entry(12, False, -1)) == "U12-"
