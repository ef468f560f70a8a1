import itertools

import pytest
from hypothesis import given, strategies as st

from fatpoints.lattice import E, E0, K, MINUS_K, DivisorClass, intersect
from fatpoints.weyl import (OrbitCapExceeded, all_roots, exceptional_classes,
                            is_positive_root, orbit, positive_roots, reflect,
                            simple_roots)

classes = st.builds(DivisorClass, st.tuples(*[st.integers(-40, 40)] * 7))


def test_simple_roots():
    r = simple_roots()
    assert r[0] == DivisorClass((1, 1, 1, 1, 0, 0, 0))
    assert r[3] == E[3] - E[4]
    assert all(x.dot(x) == -2 for x in r)
    assert all(K.dot(x) == 0 for x in r)


def test_reflect_examples():
    assert reflect(E[1], 0) == E0 - E[2] - E[3]
    assert reflect(reflect(E[3] - E[4], 0), 3) == DivisorClass((1, 1, 1, 1, 0, 0, 0))
    for i in range(6):
        assert reflect(K, i) == K
    with pytest.raises(IndexError):
        reflect(E0, 6)


def _shape_count(degree, mult_pattern):
    """Number of coefficient rearrangements of a multiplicity pattern."""
    seen = set()
    for p in itertools.permutations(mult_pattern):
        seen.add(p)
    return len(seen)


def test_orbit_of_e0_census():
    # independent census: the five multiplicity shapes and their counts
    shapes = [
        (1, (0, 0, 0, 0, 0, 0)),
        (2, (1, 1, 1, 0, 0, 0)),
        (3, (2, 1, 1, 1, 1, 0)),
        (4, (2, 2, 2, 1, 1, 1)),
        (5, (2, 2, 2, 2, 2, 2)),
    ]
    expected = set()
    for d, pattern in shapes:
        for p in set(itertools.permutations(pattern)):
            expected.add(DivisorClass((d,) + p))
    assert sum(_shape_count(d, m) for d, m in shapes) == 72
    orb = orbit(E0)
    assert len(orb) == 72
    assert orb.elements == expected
    assert E0 in orb


def test_orbit_of_ruling_census():
    shapes = [
        (1, (1, 0, 0, 0, 0, 0)),
        (2, (1, 1, 1, 1, 0, 0)),
        (3, (2, 1, 1, 1, 1, 1)),
    ]
    expected = set()
    for d, pattern in shapes:
        for p in set(itertools.permutations(pattern)):
            expected.add(DivisorClass((d,) + p))
    orb = orbit(E0 - E[1])
    assert len(orb) == 27
    assert orb.elements == expected


def test_orbit_of_anticanonical_is_fixed():
    assert orbit(MINUS_K).elements == {MINUS_K}


def test_orbit_cap():
    with pytest.raises(OrbitCapExceeded):
        orbit(DivisorClass((4, 1, 1, 1, 0, 0, 0)), cap=10)


def test_all_roots():
    roots = all_roots()
    assert len(roots) == 72
    assert all(c.dot(c) == -2 and K.dot(c) == 0 for c in roots)
    assert set(roots) == orbit(simple_roots()[0]).elements
    assert is_positive_root(simple_roots()[0])
    assert not is_positive_root(-simple_roots()[0])


def test_positive_roots_against_brute_force():
    # brute-force oracle: nonnegative combinations of the simple roots with
    # coefficients up to the largest occurring value
    rs = simple_roots()
    combos = set()
    for coeffs in itertools.product(range(4), repeat=6):
        total = DivisorClass((0,) * 7)
        for n, r in zip(coeffs, rs):
            total = total + n * r
        combos.add(total)
    pos = positive_roots()
    assert len(pos) == 36
    assert all(c in combos for c in pos)
    neg = [c for c in all_roots() if not is_positive_root(c)]
    assert len(neg) == 36
    assert all(-c in set(pos) for c in neg)


def test_exceptional_classes():
    exc = exceptional_classes()
    assert len(exc) == 27
    assert DivisorClass((1, 1, 1, 0, 0, 0, 0)) in exc
    assert all(c.dot(c) == -1 and K.dot(c) == -1 for c in exc)
    assert all(MINUS_K.dot(c) == 1 for c in exc)
    assert set(exc) == orbit(E[1]).elements


@given(classes, st.integers(0, 5))
def test_reflection_involution(x, i):
    assert reflect(reflect(x, i), i) == x


@given(classes, classes, st.integers(0, 5))
def test_reflection_isometry(x, y, i):
    assert intersect(reflect(x, i), reflect(y, i)) == intersect(x, y)


def test_orbit_invariants():
    for seed in (E0, E0 - E[1], DivisorClass((2, 1, 1, 0, 0, 0, 0))):
        orb = orbit(seed)
        sq = seed.dot(seed)
        kp = K.dot(seed)
        assert all(c.dot(c) == sq and K.dot(c) == kp for c in orb.elements)


def test_positive_root_closure():
    rs = simple_roots()
    for r in positive_roots():
        for i in range(6):
            if r == rs[i]:
                continue
            assert is_positive_root(reflect(r, i)), (r, i)


def test_orbit_sorted_deterministic():
    a = orbit(E0).sorted()
    b = orbit(E0).sorted()
    assert a == b
    assert list(a) == sorted(a)
