"""Tests for exact arithmetic in Z[2cos(pi/L)]."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vartin.errors import InputError
from vartin.scalar import INFINITY, make_ring


def sympy_minpoly(level):
    """Independent oracle: sympy's minimal_polynomial of the algebraic number."""
    import sympy

    x = sympy.Symbol("x")
    poly = sympy.minimal_polynomial(2 * sympy.cos(sympy.pi / level), x, polys=True)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


def test_make_ring_trivial_labels():
    ring = make_ring({2, INFINITY})
    assert ring.level == 1
    assert ring.minpoly == (-2, 1)
    assert ring.degree == 1


def test_make_ring_label_three():
    ring = make_ring({3})
    assert ring.level == 3
    assert ring.minpoly == (-1, 1)
    assert ring.degree == 1
    assert ring.generator() == ring.one


def test_make_ring_label_five_golden_ratio():
    ring = make_ring({5})
    assert ring.minpoly == (-1, -1, 1)  # x^2 - x - 1, root near 1.618
    assert ring.degree == 2
    assert ring.minpoly == sympy_minpoly(5)


@pytest.mark.parametrize("level", [4, 6, 7, 12])
def test_minpoly_matches_independent_oracle(level):
    ring = make_ring({level})
    assert ring.level == level
    assert ring.minpoly == sympy_minpoly(level)


def test_make_ring_lcm_of_labels():
    ring = make_ring({3, 4, INFINITY, 2})
    assert ring.level == 12
    # degree = phi(2L)/2 for L >= 2
    assert ring.degree == 4


def test_make_ring_rejects_bad_labels():
    with pytest.raises(InputError):
        make_ring({0})
    with pytest.raises(InputError):
        make_ring({1, 3})


def test_golden_ratio_square():
    ring = make_ring({5})
    c = ring.generator()
    assert c * c == c + ring.one


def test_additive_inverse_and_identity():
    ring = make_ring({5})
    a = ring.reduce([3, -2])
    assert (a + (-a)).is_zero()
    assert ring.one * a == a


def test_sign_examples():
    ring3 = make_ring({3})
    assert (-ring3.two_cos_pi_over(3)).sign() == -1  # -2cos(pi/3) = -1
    assert ring3.zero.sign() == 0
    ring5 = make_ring({5})
    assert ring5.two_cos_pi_over(5).sign() == 1


def test_sign_of_form_values_for_all_labels():
    # For every finite label m: -2cos(pi/m) < 0 and 2 - 2cos(pi/m) > 0.
    ring = make_ring({3, 4, 5, 6, 12})
    two = ring.from_int(2)
    for m in (3, 4, 6, 12):
        v = ring.two_cos_pi_over(m)
        assert (-v).sign() == -1
        assert (two - v).sign() == 1


def test_sign_antisymmetry_and_squares():
    ring = make_ring({5, 4})
    rng = random.Random(0)
    for _ in range(100):
        a = ring.reduce([rng.randint(-5, 5) for _ in range(ring.degree)])
        assert a.sign() == -((-a).sign())
        assert (a * a).sign() in (0, 1)


def test_ring_mismatch_rejected():
    a = make_ring({5}).generator()
    b = make_ring({4}).generator()
    with pytest.raises(InputError):
        a + b


def test_fraction_coefficients_survive_roundtrip():
    ring = make_ring({4})
    a = ring.reduce([Fraction(1, 2), Fraction(-3, 4)])
    assert (a + a).coeffs == (1, Fraction(-3, 2))
    assert (a - a).is_zero()


def test_inverse_on_random_nonzero():
    ring = make_ring({12})
    rng = random.Random(1)
    for _ in range(25):
        coeffs = [rng.randint(-4, 4) for _ in range(ring.degree)]
        a = ring.reduce(coeffs)
        if a.is_zero():
            continue
        assert a * a.inverse() == ring.one


coeff = st.integers(min_value=-8, max_value=8)


@settings(max_examples=150, deadline=None)
@given(st.lists(coeff, min_size=2, max_size=2),
       st.lists(coeff, min_size=2, max_size=2),
       st.lists(coeff, min_size=2, max_size=2))
def test_ring_axioms(xs, ys, zs):
    ring = make_ring({5})
    a, b, c = ring.reduce(xs), ring.reduce(ys), ring.reduce(zs)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + b == b + a
