"""Kernel tests: exact polynomial arithmetic, determinants, square roots."""

import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from polyadjoint.polyring import (
    Poly,
    PolyMatrix,
    VarRegistry,
    equal_up_to_scalar,
    exact_divide,
    gradient_at,
    perfect_square_up_to_scalar,
)

REG = VarRegistry(["x", "y", "z"])


def coeffs():
    return st.fractions(
        min_value=-20, max_value=20, max_denominator=7
    )


def exponents():
    return st.tuples(
        st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)
    )


def polys():
    return st.dictionaries(exponents(), coeffs(), max_size=6).map(
        lambda d: Poly(REG, d)
    )


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + REG.zero() == f
    assert f * REG.one() == f
    assert (f - f).is_zero()


@settings(max_examples=40, deadline=None)
@given(polys(), polys())
def test_degree_law(f, g):
    if f.is_zero() or g.is_zero():
        assert (f * g).is_zero()
    else:
        assert (f * g).degree() == f.degree() + g.degree()


@settings(max_examples=40, deadline=None)
@given(polys(), polys())
def test_derivative_product_rule(f, g):
    for v in range(3):
        lhs = (f * g).derivative(v)
        rhs = f.derivative(v) * g + f * g.derivative(v)
        assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(polys())
def test_json_roundtrip(f):
    assert Poly.from_json(f.to_json(), REG) == f


@settings(max_examples=40, deadline=None)
@given(polys(), coeffs())
def test_equal_up_to_scalar(f, c):
    if f.is_zero() or c == 0:
        return
    assert equal_up_to_scalar(f * c, f) == c
    x = REG.var("x")
    if not (f * x - f).is_zero():
        assert equal_up_to_scalar(f + x * f, f) is None


@settings(max_examples=40, deadline=None)
@given(polys(), polys())
def test_exact_divide(f, g):
    if g.is_zero():
        return
    q = exact_divide(f * g, g)
    assert q == f


def _to_sympy(f):
    xs = sympy.symbols("x y z")
    expr = 0
    for e, c in f.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, p in zip(xs, e):
            term *= s**p
        expr += term
    return sympy.expand(expr)


def _sympy_is_square_up_to_scalar(f):
    """Independent oracle: factor and check all multiplicities are even."""
    expr = _to_sympy(f)
    _, factors = sympy.factor_list(expr)
    return all(mult % 2 == 0 for _, mult in factors)


@settings(max_examples=30, deadline=None)
@given(polys(), coeffs())
def test_perfect_square_roundtrip(f, lam):
    if f.is_zero() or lam == 0:
        return
    sq = f * f * lam
    result = perfect_square_up_to_scalar(sq)
    assert result is not None
    mu, root = result
    assert root * root * mu == sq
    assert root.content() == Fraction(1)


@settings(max_examples=30, deadline=None)
@given(polys())
def test_perfect_square_matches_sympy_oracle(f):
    if f.is_zero():
        return
    ours = perfect_square_up_to_scalar(f) is not None
    assert ours == _sympy_is_square_up_to_scalar(f)


def test_non_square_rejected():
    x, y, z = REG.variables()
    assert perfect_square_up_to_scalar(x * x + y) is None
    assert perfect_square_up_to_scalar(x * y) is None
    # scalar multiples of squares are accepted (scalar need not be a square)
    lam, root = perfect_square_up_to_scalar((x + y) ** 2 * Fraction(-3, 7))
    assert lam == Fraction(-3, 7) and root == x + y


def _random_matrix(rng, size):
    entries = []
    for _ in range(size):
        row = []
        for _ in range(size):
            terms = {}
            for _ in range(rng.randrange(3)):
                e = tuple(rng.randrange(2) for _ in range(3))
                terms[e] = Fraction(rng.randrange(-4, 5))
            row.append(Poly(REG, terms))
        entries.append(row)
    return PolyMatrix(entries)


def test_det_cofactor_equals_bareiss():
    rng = random.Random(7)
    for size in (2, 3, 4, 5):
        for _ in range(4):
            m = _random_matrix(rng, size)
            assert m._det_cofactor(m.entries) == m._det_bareiss()


def test_det_multiplicativity_on_numeric():
    rng = random.Random(11)
    creg = VarRegistry(["t"])
    for _ in range(5):
        a = [[creg.constant(rng.randrange(-5, 6)) for _ in range(4)] for _ in range(4)]
        b = [[creg.constant(rng.randrange(-5, 6)) for _ in range(4)] for _ in range(4)]
        prod = [
            [
                sum((a[i][k] * b[k][j] for k in range(4)), creg.zero())
                for j in range(4)
            ]
            for i in range(4)
        ]
        assert PolyMatrix(prod).det() == PolyMatrix(a).det() * PolyMatrix(b).det()


def test_matrix_json_roundtrip():
    rng = random.Random(3)
    m = _random_matrix(rng, 3)
    assert PolyMatrix.from_json(m.to_json(), REG).entries == m.entries


def test_homogenize_dehomogenize():
    x, y, z = REG.variables()
    f = x * x + 2 * y + 3
    target = VarRegistry(["w", "x", "y", "z"])
    h = f.homogenize(target, "w", 3)
    assert h.is_homogeneous() and h.degree() == 3
    back = h.dehomogenize(REG, "w")
    assert back == f


def test_gradient_euler_identity():
    x, y, z = REG.variables()
    f = x**3 + x * y * z - 2 * z**3
    pt = (Fraction(1), Fraction(-2), Fraction(3))
    grad = gradient_at(f, pt)
    assert sum(g * p for g, p in zip(grad, pt)) == 3 * f.evaluate(pt)


def test_substitute_composition():
    x, y, z = REG.variables()
    f = x * y + z * z
    g = f.substitute({"x": y + 1, "z": REG.constant(2)})
    assert g == (y + 1) * y + 4
