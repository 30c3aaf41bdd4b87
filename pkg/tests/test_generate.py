import itertools

import pytest

from vlink.gauss import Diagram, Entry, validate
from vlink.generate import all_colourings, all_diagrams, canonical_form, random_colouring, random_diagram
from vlink.parity import admissible_weightings


def test_same_seed_same_diagram():
    assert random_diagram(7, 6, 3) == random_diagram(7, 6, 3)
    assert len({random_diagram(s, 6, 3) for s in range(50)}) > 40


def test_zero_crossings_gives_circles():
    for s in range(20):
        d = random_diagram(s, 0, 3)
        assert d.n_crossings == 0 and all(not c for c in d.components)


def test_ten_thousand_samples_validate():
    for s in range(10_000):
        assert validate(random_diagram(s, 8, 3)) == []


def test_every_sign_and_passage_pattern_occurs():
    seen = set()
    for s in range(400):
        d = random_diagram(s, 4, 1)
        for comp in d.components:
            for a, b in zip(comp, comp[1:]):
                seen.add((a.over, a.sign, b.over, b.sign))
    assert len(seen) == 16


def test_bad_bounds():
    with pytest.raises(ValueError):
        random_diagram(0, -1)
    with pytest.raises(ValueError):
        random_diagram(0, 3, 0)


def brute_classes(n_max, m_max):
    """Independent count: build every labelled diagram directly from
    permutations of entries and dedupe with a naive canonical form."""
    keys = set()
    for n in range(n_max + 1):
        for overs in itertools.product((True, False), repeat=n):
            for signs in itertools.product((1, -1), repeat=n):
                entries = [Entry(c + 1, o, s) for c, (o, s) in enumerate(zip(overs, signs))]
                entries += [Entry(c + 1, not o, s) for c, (o, s) in enumerate(zip(overs, signs))]
                for perm in set(itertools.permutations(entries)):
                    for m in range(1, m_max + 1):
                        for cuts in itertools.combinations_with_replacement(range(2 * n + 1), m - 1):
                            b = [0, *cuts, 2 * n]
                            d = Diagram(tuple(perm[x:y] for x, y in zip(b, b[1:])))
                            keys.add(canonical_form(d))
    return len(keys)


def naive_form(d):
    best = None
    for perm in itertools.permutations(d.components):
        for rots in itertools.product(*[[c[i:] + c[:i] for i in range(len(c))] or [c] for c in perm]):
            lab = {}
            key = tuple(tuple((lab.setdefault(e.crossing, len(lab)), e.over, e.sign) for e in c) for c in rots)
            if best is None or (tuple(map(len, key)), key) < best:
                best = (tuple(map(len, key)), key)
    return best


@pytest.mark.parametrize("n, m, count", [(0, 2, 2), (1, 1, 3), (2, 2, 61)])
def test_enumeration_counts(n, m, count):
    ds = list(all_diagrams(n, m))
    assert len(ds) == count
    assert len({naive_form(d) for d in ds}) == count
    assert brute_classes(n, m) == count


def test_fixed_sign_subset():
    signed = {canonical_form(d) for d in all_diagrams(3, 2)}
    plus = list(all_diagrams(3, 2, sign=1))
    assert all(e.sign == 1 for d in plus for c in d.components for e in c)
    assert {canonical_form(d) for d in plus} <= signed
    with pytest.raises(ValueError):
        list(all_diagrams(1, 1, sign=0))


def test_colourings_are_admissible():
    import random

    rng = random.Random(3)
    for s in range(200):
        d = random_diagram(s, 6, 2)
        col = random_colouring(d, rng)
        assert col.admissible()
    d = random_diagram(11, 4, 2)
    space = admissible_weightings(d)
    assert len(list(all_colourings(d))) == 2**space.dim * 2**d.n_components
