import itertools

import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from vlink import gf2

matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(st.lists(st.integers(0, 1), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@given(matrices)
def test_nullspace_matches_brute_force(rows):
    a = np.array(rows, dtype=np.uint8)
    n = a.shape[1]
    brute = {v for v in itertools.product((0, 1), repeat=n) if not ((a @ np.array(v)) % 2).any()}
    basis = gf2.nullspace(a)
    spanned = {tuple(int(x) for x in v) for v in gf2.span(basis)}
    assert spanned == brute
    assert len(basis) == n - gf2.rank(a)


def test_span_starts_with_zero():
    basis = np.array([[1, 0, 1], [0, 1, 1]], dtype=np.uint8)
    vs = [tuple(v) for v in gf2.span(basis)]
    assert vs[0] == (0, 0, 0)
    assert len(set(vs)) == 4


def test_empty_matrix_nullspace_is_everything():
    assert gf2.nullspace(np.zeros((0, 3), dtype=np.uint8)).shape == (3, 3)
