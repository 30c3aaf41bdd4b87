"""Linear algebra over GF(2) on uint8 numpy arrays."""
from __future__ import annotations

import itertools
from typing import Iterator

import numpy as np


def rref(a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = (np.asarray(a, dtype=np.uint8) & 1).copy()
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        hits = np.nonzero(m[r:, c])[0]
        if hits.size == 0:
            continue
        p = r + int(hits[0])
        if p != r:
            m[[r, p]] = m[[p, r]]
        others = np.nonzero(m[:, c])[0]
        others = others[others != r]
        if others.size:
            m[others] ^= m[r]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(a: np.ndarray) -> int:
    return len(rref(a)[1])


def nullspace(a: np.ndarray) -> np.ndarray:
    """Basis of {x : a x = 0}, one vector per row, ordered by free column."""
    a = np.asarray(a, dtype=np.uint8)
    n = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(n, dtype=np.uint8)
    r, pivots = rref(a)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.uint8)
    for t, f in enumerate(free):
        basis[t, f] = 1
        for row, p in enumerate(pivots):
            basis[t, p] = r[row, f]
    return basis


def span(basis: np.ndarray) -> Iterator[np.ndarray]:
    """All 2**len(basis) combinations, zero vector first."""
    basis = np.asarray(basis, dtype=np.uint8)
    n = basis.shape[1]
    for bits in itertools.product((0, 1), repeat=len(basis)):
        v = np.zeros(n, dtype=np.uint8)
        for b, row in zip(bits, basis):
            if b:
                v ^= row
        yield v
