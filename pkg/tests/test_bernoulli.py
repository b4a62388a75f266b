from __future__ import annotations

from fractions import Fraction as F
from itertools import islice
from math import factorial

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from hzeta import bernoulli as bn
from hzeta.exact import Params, pochhammer_ratios
from hzeta.poly import Poly
from hzeta.zeta import zeta_linear

from _oracles import GRID, bernoulli_sympy

pos_rats = st.builds(F, st.integers(1, 40), st.integers(1, 8))
rats = st.builds(F, st.integers(-20, 20), st.integers(1, 9))


def test_classical_numbers_match_sympy():
    got = bn.bern_numbers(Params.of(1, 1), 30).numbers
    assert got == [bernoulli_sympy(n) for n in range(31)]


def test_worked_five_three():
    t = bn.bern_numbers(Params.of(5, 3), 3)
    assert t.numbers == [1, F(-5, 8), F(35, 96), F(-149, 768)]


def test_generating_function_sympy():
    # n! [z^n] 1/1F1(a; a+b; z) through sympy's own hypergeometric series
    z = sympy.symbols("z")
    a, b = sympy.Rational(2, 7), sympy.Rational(9, 4)
    phi = sum(sympy.rf(a, k) / sympy.rf(a + b, k) * z**k / sympy.factorial(k) for k in range(9))
    ref = sympy.series(1 / phi, z, 0, 9).removeO()
    got = bn.bern_numbers(Params.of(F(2, 7), F(9, 4)), 8)
    for n in range(9):
        c = ref.coeff(z, n) * sympy.factorial(n)
        assert sympy.Rational(got[n].numerator, got[n].denominator) == c


@given(pos_rats, pos_rats)
def test_iter_matches_table(a, b):
    p = Params(a, b)
    assert list(islice(bn.iter_bern_numbers(p), 15)) == bn.bern_numbers(p, 14).numbers


@pytest.mark.parametrize("b", range(1, 9))
def test_howard_equals_inversion(b):
    assert bn.bern_howard(b, 20).numbers == bn.bern_numbers(Params.of(1, b), 20).numbers


@pytest.mark.parametrize("b", range(1, 9))
def test_bernoulli_zeta_relation(b):
    assert bn.bern_zeta_relation_check(b, 20).ok


@pytest.mark.parametrize("a,b", GRID)
def test_zeta_from_bernoulli_identity(a, b):
    rep = bn.zeta_from_bernoulli_check(Params(a, b), 20)
    assert rep.ok, rep.failures


def test_zeta_from_bernoulli_worked_instance():
    p = Params.of(5, 3)
    z, B = zeta_linear(p, 3), bn.bern_numbers(p, 3)
    assert 2 * z[3] - F(5, 4) * z[2] == F(13, 384) == p.mean * B[2] + B[3]


def test_classical_polynomials_match_sympy():
    x = sympy.symbols("x")
    for n in range(10):
        ref = sympy.Poly(sympy.bernoulli(n, x), x).all_coeffs()[::-1]
        got = bn.bern_poly(Params.of(1, 1), n)
        assert [sympy.Rational(c.numerator, c.denominator) for c in got.coeffs] == ref


def test_companion_is_shifted_beta_moment():
    # C_1(z) = z + a/(a+b); C_2(z) = z^2 + 2 z r(1) + r(2)
    p = Params.of(2, 3)
    r = pochhammer_ratios(p, 2)
    assert bn.companion_poly(p, 1) == Poly((F(2, 5), 1))
    assert bn.companion_poly(p, 2) == Poly((r[2], 2 * r[1], 1))


@pytest.mark.parametrize("b", range(1, 7))
def test_difference_recursion(b):
    assert bn.dilcher_check(b, 12).ok


@pytest.mark.parametrize("a,b", GRID)
def test_polynomial_identities(a, b):
    p = Params(a, b)
    for rep in (
        bn.symmetry_check(p, 12),
        bn.change_of_basis_check(p, 12),
        bn.conjugate_recurrence_check(p, 10),
        bn.conjugacy_check(p, 12),
        bn.appell_check(p, 12),
    ):
        assert rep.ok, (rep.name, rep.failures)


def test_binomial_change_of_basis_keys_for_integers():
    rep = bn.change_of_basis_check(Params.of(3, 2), 8)
    assert ("binomial", 8) in rep.results and rep.ok
    assert not any(isinstance(k, tuple) for k in bn.change_of_basis_check(Params.of(F(1, 2), 2), 4).results)


def test_checks_notice_wrong_data():
    # reflection needs the swapped family; the unswapped one does not satisfy it
    p = Params.of(5, 3)
    polys = bn.bern_polys(p, 4)
    assert polys[3].reflect() != -polys[3]
    assert polys[3].reflect() == -bn.bern_polys(p.swapped(), 4)[3]
    with pytest.raises(ValueError):
        bn.dilcher_check(F(1, 2), 3)
    with pytest.raises(ValueError):
        bn.bern_howard(0, 3)


@given(st.lists(rats, min_size=1, max_size=12))
def test_cumulant_roundtrip(tail):
    m = [F(1)] + tail
    assert bn.cumulants_to_moments(bn.moments_to_cumulants(m)) == m


def test_cumulants_of_standard_normal():
    # moments 1, 0, 1, 0, 3, 0, 15 have kappa_2 = 1 and every other cumulant 0
    k = bn.moments_to_cumulants([1, 0, 1, 0, 3, 0, 15])
    assert k.kappas == [0, 1, 0, 0, 0, 0]
    with pytest.raises(IndexError):
        k[0]
    with pytest.raises(ValueError):
        bn.moments_to_cumulants([2, 1])


@pytest.mark.parametrize("a,b", GRID[:10])
def test_cumulants(a, b):
    p = Params(a, b)
    z = zeta_linear(p, 15)
    kb = bn.beta_cumulants(p, 15)
    assert kb[1] == a / (a + b)
    assert all(kb[j] == -factorial(j - 1) * z[j] for j in range(2, 16))
    kz = bn.moments_to_cumulants(bn.bern_numbers(p, 15).numbers)
    assert kz == -kb
    assert kz.kappas == bn.zero_variable_cumulants(p, 15, z)
    assert bn.cumulant_check(p, 15).ok


def test_table_json():
    t = bn.bern_numbers(Params.of(1, 2), 3)
    assert t.to_dict() == {"a": "1", "b": "2", "bernoulli": ["1", "-1/3", "1/18", "1/90"]}
    assert t.denominators() == [1, 3, 18, 90]
    with pytest.raises(ValueError):
        bn.bern_numbers(Params.of(1, 2), -1)


# polynomial arithmetic, checked against sympy

@st.composite
def polys(draw):
    return Poly(tuple(draw(st.lists(rats, min_size=1, max_size=6))))


def _sym(p):
    x = sympy.symbols("x")
    return sympy.expand(sum(sympy.Rational(c.numerator, c.denominator) * x**k for k, c in enumerate(p.coeffs)))


@given(polys(), polys(), rats)
def test_poly_arithmetic(p, q, h):
    x = sympy.symbols("x")
    assert sympy.expand(_sym(p * q) - _sym(p) * _sym(q)) == 0
    assert sympy.expand(_sym(p - q) - _sym(p) + _sym(q)) == 0
    shifted = _sym(p).subs(x, x + sympy.Rational(h.numerator, h.denominator))
    assert sympy.expand(_sym(p.shift(h)) - shifted) == 0
    assert p.reflect().reflect() == p
    assert p.shift(h) == p(Poly((h, 1)))
    assert p(h) == p.compose(Poly.const(h)).coeffs[0]


def test_poly_basics():
    p = Poly((1, 0, 0))
    assert p.degree == 0 and Poly((0,)).degree == -1
    assert str(Poly((F(1, 2), -1, 1))) == "x^2 - x + 1/2"
    assert Poly.X.derivative() == Poly.const(1)
    assert Poly.monomial(3, 2).to_json() == ["0", "0", "0", "2"]
