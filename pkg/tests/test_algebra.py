from fractions import Fraction
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, strategies as st

from slipcheck.algebra import (
    ParseError,
    PolyRing,
    Polynomial,
    RingMismatchError,
    apply_linear_substitution,
    format_polynomial,
    graded_piece_dim,
    parse_polynomial,
)

R3 = PolyRing.standard(3)
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def poly_strategy(ring=R3, max_deg=3, homogeneous_degree=None):
    n = ring.nvars
    if homogeneous_degree is not None:
        mono = st.lists(st.integers(0, n - 1), min_size=homogeneous_degree, max_size=homogeneous_degree)
    else:
        mono = st.lists(st.integers(0, n - 1), max_size=max_deg)

    def build(pairs):
        terms = {}
        for idx, c in pairs:
            e = [0] * n
            for i in idx:
                e[i] += 1
            terms[tuple(e)] = terms.get(tuple(e), 0) + c
        return Polynomial(ring, terms)

    return st.lists(st.tuples(mono, coeffs), max_size=5).map(build)


def test_add_inverse():
    a0 = R3.gen(0)
    assert (a0 + (-a0)).is_zero()
    assert str(a0 - a0) == "0"


def test_difference_of_squares():
    a0, a1, _ = R3.gens()
    assert (a0 + a1) * (a0 - a1) == R3("a0^2 - a1^2")


def test_rational_product():
    a0, a1, _ = R3.gens()
    assert (Fraction(1, 2) * a0) * (Fraction(2, 3) * a1) == R3("1/3*a0*a1")


def test_scale_and_scalar_division():
    f = R3("2*a0 + 4*a1")
    assert f.scale(Fraction(1, 2)) == R3("a0 + 2*a1")
    assert f / 2 == R3("a0 + 2*a1")
    assert f.scale(0).is_zero()


def test_ring_mismatch():
    other = PolyRing(("x", "y", "z"))
    with pytest.raises(RingMismatchError):
        R3.gen(0) + other.gen(0)


@pytest.mark.parametrize("nvars,d,expected", [(3, 2, 6), (4, 1, 4), (3, 5, 21), (3, -1, 0), (1, 7, 1)])
def test_graded_piece_dim(nvars, d, expected):
    assert graded_piece_dim(PolyRing.standard(nvars), d) == expected


def test_graded_piece_dim_matches_enumeration():
    for n in range(1, 8):
        for d in range(11):
            count = len(set(combinations_with_replacement(range(n), d)))
            assert graded_piece_dim(n, d) == count
            assert len(PolyRing.standard(n).monomials(d)) == count


def test_homogeneous_component():
    f = R3("a0^2 + a1")
    assert f.homogeneous_component(1) == R3("a1")
    assert f.homogeneous_component(3).is_zero()
    g = R3("a0*a1 + a2^2")
    assert g.homogeneous_component(2) == g
    assert not f.is_homogeneous() and g.is_homogeneous()


def test_substitution_identity_and_swap():
    f = R3("a0^2*a1 - 3*a2^3")
    ident = [[int(i == j) for j in range(3)] for i in range(3)]
    assert apply_linear_substitution(f, ident) == f
    swap = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
    assert apply_linear_substitution(R3("a0^2"), swap) == R3("a1^2")


def test_substitution_builds_shifted_square():
    X = PolyRing.standard(5, prefix="x")
    M = [[int(i == j) for j in range(5)] for i in range(5)]
    M[3][4] = 1
    assert apply_linear_substitution(X("x3^2"), M) == X("x3^2 + 2*x3*x4 + x4^2")


def test_substitution_checks():
    with pytest.raises(ValueError):
        apply_linear_substitution(R3("a0"), [[1, 0], [0, 1]])
    with pytest.raises(ValueError):
        apply_linear_substitution(R3("a0"), [[1, 1, 0], [1, 1, 0], [0, 0, 1]], check_invertible=True)


def test_format_canonical():
    assert format_polynomial(R3("-a2^3 + 3/2*a1*a0^2")) == "3/2*a0^2*a1 - a2^3"
    assert str(R3("a0**2 - 1*a1*a0")) == "a0^2 - a0*a1"
    assert str(R3.zero()) == "0"


@pytest.mark.parametrize("bad", ["a0^", "a0 + * a1", "b7", "1/0*a0", "a0^-1"])
def test_parse_errors(bad):
    with pytest.raises((ParseError, ZeroDivisionError, ValueError)):
        parse_polynomial(bad, R3)


@given(poly_strategy())
def test_round_trip(f):
    assert parse_polynomial(format_polynomial(f), R3) == f


@given(poly_strategy(), poly_strategy(), poly_strategy())
def test_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + g == g + f and f * g == g * f
    assert f - f == R3.zero()
    assert f * R3.one() == f


@given(poly_strategy(homogeneous_degree=2), poly_strategy(homogeneous_degree=3))
def test_degree_additive(f, g):
    if f and g:
        assert (f * g).degree() == f.degree() + g.degree()
        assert (f * g).is_homogeneous()


def test_diff():
    f = R3("a0^3*a1 + a2")
    assert f.diff(0) == R3("3*a0^2*a1")
    assert f.diff(0, 3) == R3("6*a1")
    assert f.diff(1, 2).is_zero()


def test_power_and_hash():
    f = R3("a0 + a1")
    assert f**3 == f * f * f
    assert hash(R3("a0+a1")) == hash(f)
    assert f**0 == 1
