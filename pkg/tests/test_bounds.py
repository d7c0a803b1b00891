import pytest
import sympy
from hypothesis import given

from gsp4hecke.algebra import P, parse
from gsp4hecke.bounds import (
    NEG_INF,
    basic_h_bound,
    cross_prime_bound,
    element_h_bound,
    good_primes,
)
from gsp4hecke.errors import InvalidIndex, SamePrime
from gsp4hecke.golden import REFERENCE_NORM_DEGREES
from gsp4hecke.hecke import HeckeElement, decompose_expr, multiply_basis
from gsp4hecke.rootdatum import norm_star_H

from strategies import hecke_elements


def test_basic_examples():
    assert basic_h_bound(1, 2).is_zero
    assert basic_h_bound(1, 2).leading_degree == NEG_INF
    assert basic_h_bound(0, 0).value == 1
    for l in range(1, 6):
        assert basic_h_bound(0, l).value == 2 * P ** (2 * l)


@pytest.mark.parametrize("idx", [(m, l) for l in range(11) for m in range(l // 2 + 1)])
def test_vanishing_dichotomy(idx):
    m, l = idx
    b = basic_h_bound(m, l)
    assert b.is_zero == (m > 0)
    if m == 0:
        assert b.leading_degree == 2 * l == 2 * norm_star_H(l)


def test_invalid():
    with pytest.raises(InvalidIndex):
        basic_h_bound(1, 1)


@pytest.mark.parametrize("key", list(REFERENCE_NORM_DEGREES))
def test_norm_degrees(key):
    b = element_h_bound(decompose_expr(key), 11).symbolic
    want = REFERENCE_NORM_DEGREES[key]
    assert (None if b.is_zero else b.leading_degree) == want


def test_t2_squared_bound_is_explicit():
    b = element_h_bound(decompose_expr("T2^2"), 3)
    assert b.symbolic.value == parse("p^4+p^3+p^2+p") + (P + 1) * 2 * P**4
    assert b.numeric == b.symbolic.at(3)


def test_numeric_abs_not_above_symbolic():
    h = decompose_expr("sigma^2")
    for p in (3, 7, 11, 101):
        b = element_h_bound(h, p)
        assert b.numeric <= b.symbolic.at(p)


@given(hecke_elements, hecke_elements)
def test_subadditive(a, b):
    for p in (3, 7, 11, 101):
        assert element_h_bound(a + b, p).numeric <= element_h_bound(a, p).numeric + element_h_bound(b, p).numeric


def test_cross_prime():
    t2 = decompose_expr("T2")
    sig = decompose_expr("sigma")
    assert cross_prime_bound(element_h_bound(t2, 3), element_h_bound(t2, 7)) == 0
    v = cross_prime_bound(element_h_bound(sig, 101), element_h_bound(sig, 103))
    assert v == (101**3 + 101**2 + 102) * (103**3 + 103**2 + 104)
    assert cross_prime_bound(element_h_bound(sig, 5), element_h_bound(HeckeElement(), 7)) == 0
    with pytest.raises(SamePrime):
        cross_prime_bound(element_h_bound(sig, 5), element_h_bound(t2, 5))


@pytest.mark.parametrize("x, y", [("T2", "T2"), ("sigma", "sigma"), ("T2", "sigma")])
def test_product_bound_below_recombined_tables(x, y):
    hx, hy = decompose_expr(x), decompose_expr(y)
    prod = decompose_expr(f"({x})*({y})")
    for p in (3, 7, 11, 101):
        recombined = 0
        for i, ci in hx.terms.items():
            for j, cj in hy.terms.items():
                basic = multiply_basis(HeckeElement.basic(*i), HeckeElement.basic(*j))
                recombined += abs(ci.evaluate_p(p) * cj.evaluate_p(p)) * element_h_bound(basic, p).numeric
        assert element_h_bound(prod, p).numeric <= recombined


def test_good_primes_examples():
    assert good_primes(10, 3) == [11, 19, 23]
    assert good_primes(3, 1) == [3]
    with pytest.raises(NotImplementedError):
        good_primes(10, g_rational=False)


def test_good_primes_against_sympy():
    for P_ in (10, 100, 1000, 4321):
        want = [q for q in sympy.primerange(P_, 2 * P_ + 1) if q % 4 == 3]
        assert good_primes(P_) == want


def test_good_prime_proportion():
    total = sympy.primepi(2000) - sympy.primepi(999)
    assert len(good_primes(1000)) >= 0.9 * (total / 2)
