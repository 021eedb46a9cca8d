from __future__ import annotations

import pytest
from hypothesis import given, strategies as st
from sympy import divisors

from bch_atlas.cosets import CosetContext, coset_of
from bch_atlas.errors import DivisionByZero, MixedFields, NotPrime
from bch_atlas.gf import (
    Poly,
    PrimeField,
    build_tower,
    field_arith,
    is_irreducible,
    minimal_polynomial,
    poly_op,
    prime_power,
    tower_for,
)


def test_gf16_modulus_is_first_irreducible():
    t = build_tower(2, 1, 4)
    assert t.top_modulus == (1, 1, 0, 0, 1)
    code = sum(c * 2**i for i, c in enumerate(t.top_modulus))
    assert code == 19


def test_gf4_mid_modulus_and_trivial_top():
    t = build_tower(2, 2, 1)
    assert t.mid_modulus == (1, 1, 1)
    assert t.top is t.mid
    assert t.top_modulus is None


def test_gf2_trivial():
    t = build_tower(2, 1, 1)
    assert t.mid_modulus is None and t.top_modulus is None
    assert t.alpha == 1


def test_field_arith_examples():
    gf4 = build_tower(2, 2, 1).mid
    y = gf4(2)
    assert field_arith("mul", y, y).code == 3  # y + 1
    t16 = build_tower(2, 1, 4)
    alpha = t16.top(t16.alpha)
    assert field_arith("pow", alpha, 15).code == 1
    gf3 = PrimeField(3)
    assert field_arith("inv", gf3(2)).code == 2


def test_division_by_zero_and_mixed_fields():
    gf3 = PrimeField(3)
    with pytest.raises(DivisionByZero):
        field_arith("inv", gf3(0))
    with pytest.raises(MixedFields):
        gf3(1) + PrimeField(5)(1)


def test_not_prime_power():
    with pytest.raises(NotPrime):
        prime_power(6)
    assert prime_power(9).p == 3 and prime_power(9).e == 2


def test_minimal_polynomial_examples():
    t = build_tower(2, 1, 4)
    assert minimal_polynomial(t, 15, 0).coeffs == (1, 1)
    assert minimal_polynomial(t, 15, 1).coeffs == (1, 1, 0, 0, 1)
    t64 = tower_for(2, 63)
    assert minimal_polynomial(t64, 63, 9).degree == 3


def test_poly_op_examples():
    F2 = PrimeField(2)
    x1 = Poly(F2, (1, 1))
    assert poly_op("lcm", x1, x1) == x1
    f = Poly(F2, (1, 1, 0, 0, 1))
    assert poly_op("divides", f, Poly.x_pow_minus_one(F2, 15))
    F3 = PrimeField(3)
    assert poly_op("eval", Poly(F3, (1, 0, 1)), F3(1)).code == 2


TOWERS = [(2, 1, 4), (2, 1, 6), (3, 1, 4), (2, 2, 3), (5, 1, 2), (3, 2, 2)]


@pytest.mark.parametrize("p,e,m", TOWERS)
def test_minimal_polynomials_divide_and_match_coset_sizes(p, e, m):
    t = build_tower(p, e, m)
    q, n = p**e, t.n
    xn = Poly.x_pow_minus_one(t.mid, n)
    ctx = CosetContext.of(q, n)
    for i in range(n):
        f = minimal_polynomial(t, n, i)
        assert f.divides(xn)
        assert f.degree == coset_of(ctx, i).size
        assert f == minimal_polynomial(t, n, i * q % n)
        assert is_irreducible(t.mid, f.coeffs)


@pytest.mark.parametrize("p,e,m", TOWERS)
def test_alpha_is_primitive(p, e, m):
    t = build_tower(p, e, m)
    T, order = t.top, t.top.size - 1
    assert T.pow(t.alpha, order) == 1
    for d in divisors(order)[:-1]:
        assert T.pow(t.alpha, d) != 1


@pytest.mark.parametrize("p,e,m", TOWERS)
def test_tower_is_deterministic(p, e, m):
    a, b = build_tower(p, e, m), build_tower(p, e, m)
    assert (a.mid_modulus, a.top_modulus, a.alpha) == (b.mid_modulus, b.top_modulus, b.alpha)


@given(st.sampled_from([(2, 1, 4), (3, 1, 3), (2, 2, 2)]), st.data())
def test_field_axioms(params, data):
    t = build_tower(*params)
    T = t.top
    codes = st.integers(0, T.size - 1)
    a, b, c = (T(data.draw(codes)) for _ in range(3))
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - b) + b == a
    if b.code:
        assert (a / b) * b == a
        assert b * b.inv() == T(1)


@given(st.sampled_from([2, 3, 5]), st.lists(st.integers(0, 4), max_size=6), st.lists(st.integers(0, 4), min_size=1, max_size=4))
def test_poly_division_identity(p, a, b):
    F = PrimeField(p)
    f = Poly(F, tuple(x % p for x in a))
    g = Poly(F, tuple(x % p for x in b))
    if g.is_zero():
        return
    quo, rem = divmod(f, g)
    assert quo * g + rem == f
    assert rem.is_zero() or rem.degree < g.degree
