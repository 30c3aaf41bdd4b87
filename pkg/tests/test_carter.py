import pytest
from hypothesis import given

from conftest import HOPF, TREFOIL, VIRTUAL_HOPF, VIRTUAL_TREFOIL, diagrams
from vlink.carter import (
    FreeLoopSide,
    build_ribbon_graph,
    connected_components,
    flat_faces,
    genus,
    surface_signature,
    trace_faces,
)
from vlink.gauss import change_crossings, parse, serialize
from vlink.invariants import fast_genus


@pytest.mark.parametrize(
    "code, g", [(TREFOIL, 0), (VIRTUAL_TREFOIL, 1), (VIRTUAL_HOPF, 1), (HOPF, 0), ("", 0), (";", 0)]
)
def test_genus_anchors(code, g):
    assert genus(parse(code)).total == g


def test_trefoil_face_count_by_hand():
    (piece,) = genus(parse(TREFOIL)).components
    assert (piece.vertices, piece.edges, piece.faces) == (3, 6, 5)


def test_unknot_is_a_sphere_with_two_faces():
    g = build_ribbon_graph(parse(""))
    assert trace_faces(g) == [(FreeLoopSide(0, 0),), (FreeLoopSide(0, 1),)]
    assert genus(parse("")).euler == 2


def test_split_pieces_are_reported_separately():
    rep = genus(parse("O1+U2+U1+O2+;"))
    assert sorted(c.genus for c in rep.components) == [0, 1]
    assert surface_signature(parse("O1+U2+U1+O2+;")) == (0, 1)


def test_pairing_is_an_involution():
    g = build_ribbon_graph(parse(TREFOIL))
    for h, o in g.pairing.items():
        assert g.pairing[o] == h


@given(diagrams(6, 3))
def test_every_half_edge_on_exactly_one_face(d):
    g = build_ribbon_graph(d)
    seen = [h for f in trace_faces(g) for h in f if not isinstance(h, FreeLoopSide)]
    assert len(seen) == len(set(seen)) == 4 * d.n_crossings


@given(diagrams(6, 3))
def test_two_face_tracers_agree(d):
    g = build_ribbon_graph(d)
    n_free = sum(1 for c in d.components if not c)
    assert len(flat_faces(d)) + 2 * n_free == len(trace_faces(g))
    assert fast_genus(d) == genus(d).total


@given(diagrams(6, 3))
def test_genus_is_mirror_invariant(d):
    assert genus(change_crossings(d, d.crossings)).total == genus(d).total


@given(diagrams(6, 3))
def test_euler_parity_and_component_count(d):
    rep = genus(d)
    assert all(c.genus >= 0 for c in rep.components)
    assert len(rep.components) == len(connected_components(d))
    # the genus of a piece is at most half its number of crossings, rounded up
    for c in rep.components:
        assert c.genus <= (c.vertices + 1) // 2


@given(diagrams(4, 2), diagrams(4, 2))
def test_genus_adds_over_disjoint_unions(a, b):
    shift = max(a.crossings, default=0)
    b2 = parse(";".join(
        "".join(f"{'O' if e.over else 'U'}{e.crossing + shift}{'+' if e.sign > 0 else '-'}" for e in comp)
        for comp in b.components
    ))
    u = parse(serialize(a) + ";" + serialize(b2))
    assert genus(u).total == genus(a).total + genus(b).total
