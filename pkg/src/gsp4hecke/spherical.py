"""Spherical functions, double-coset volumes and spherical transforms.

Everything is symbolic in ``p``.  The transform of the characteristic
function of ``K T K`` is ``vol(K T K) * omega_s(T^-1)`` with ``omega_s``
given by Macdonald's formula; the Weyl sum is put over one common
denominator and reduced by exact division, so a pole that fails to cancel
surfaces as ``NotDivisible``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import ONE, LaurentPoly, RationalFn, div_exact
from .errors import InvalidIndex, NotDominant
from .rootdatum import (
    COROOTS,
    TorusExponent,
    WeylElement,
    is_positive,
    rho,
    root_values,
    stabilizer,
    weyl_apply,
    weyl_group,
    weyl_monomial_action,
)

# strictly dominant point: n < m < l/2
PROBE = TorusExponent(0, 1, 3)


def _char_poly(char: tuple[int, int], coeff: int = 1, p_exp=0) -> LaurentPoly:
    return LaurentPoly.monomial(coeff, p=p_exp, y=char[0], z=char[1])


def _binomial(char: tuple[int, int], p_exp=0) -> LaurentPoly:
    """``1 - p^p_exp * Y^i * Z^j``."""
    return ONE - _char_poly(char, 1, p_exp)


@dataclass(frozen=True)
class CFunctionTerm:
    """``c(w s)`` kept as explicit factor lists.

    ``numerators[i] / denominators[i]`` is the factor of coroot ``i``;
    each denominator is ``1 - (w s)(coroot_i)^-1``.
    """

    w: WeylElement
    numerators: tuple[LaurentPoly, ...]
    denominators: tuple[LaurentPoly, ...]
    den_chars: tuple[tuple[int, int], ...]

    @property
    def value(self) -> RationalFn:
        num, den = ONE, ONE
        for a, b in zip(self.numerators, self.denominators):
            num, den = num * a, den * b
        return RationalFn(num, den)


def c_function(w: WeylElement) -> CFunctionTerm:
    """Harish-Chandra function evaluated at ``w s``.

    ``(w s)(T) = s(w^-1 T)``, so each coroot is moved by ``w^-1`` before
    reading off its character.
    """
    winv = w.inverse()
    nums, dens, chars = [], [], []
    for cor in COROOTS:
        i, j = weyl_apply(winv, cor).character()
        inv = (-i, -j)
        nums.append(_binomial(inv, -1))
        dens.append(_binomial(inv))
        chars.append(inv)
    return CFunctionTerm(w, tuple(nums), tuple(dens), tuple(chars))


def poincare_Q() -> tuple[int, ...]:
    """Coefficients (constant term first) of ``sum_w x^|C0(w)|``."""
    return _length_polynomial(weyl_group())


def _inversion_count(w: WeylElement) -> int:
    return sum(1 for v in root_values(weyl_apply(w, PROBE)) if v < 0)


def _length_polynomial(elements) -> tuple[int, ...]:
    coeffs = [0] * 5
    for w in elements:
        coeffs[_inversion_count(w)] += 1
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _check_positive(t: TorusExponent) -> TorusExponent:
    c = t.canonical()
    if not is_positive(c):
        raise NotDominant(f"{t} is not positive (need n <= m <= l/2)")
    return c


def stabilizer_Q_t(t) -> tuple[int, ...]:
    t = _check_positive(TorusExponent(*t) if not isinstance(t, TorusExponent) else t)
    return _length_polynomial(stabilizer(t))


def _at_inverse_p(coeffs: tuple[int, ...]) -> LaurentPoly:
    return LaurentPoly.from_p_coeffs(coeffs, sign=-1)


def _two_rho(t: TorusExponent) -> int:
    r = rho(t) * 2
    assert r.denominator == 1
    return int(r)


@lru_cache(maxsize=None)
def _volume(t: TorusExponent) -> LaurentPoly:
    top = _at_inverse_p(poincare_Q()) * LaurentPoly.monomial(p=_two_rho(t))
    vol = div_exact(top, _at_inverse_p(stabilizer_Q_t(t)))
    if any(m[0] < 0 or m[0] % 2 for m in vol.terms) or any(c < 0 for _, c in vol.items()):
        raise AssertionError(f"volume of {t} is not a polynomial count: {vol}")
    return vol


def volume(t) -> LaurentPoly:
    """Number of single cosets in ``K t K`` as a polynomial in ``p``."""
    t = TorusExponent(*t) if not isinstance(t, TorusExponent) else t
    return _volume(_check_positive(t))


@lru_cache(maxsize=None)
def weyl_sum(t: TorusExponent) -> LaurentPoly:
    """``sum_w (w s)(t) c(w s)`` reduced to a Laurent polynomial."""
    t = _check_positive(t)
    terms = [c_function(w) for w in weyl_group()]
    all_chars: list[tuple[int, int]] = []
    for term in terms:
        for ch in term.den_chars:
            if ch not in all_chars:
                all_chars.append(ch)
    common = ONE
    for ch in all_chars:
        common = common * _binomial(ch)
    total = LaurentPoly()
    for term in terms:
        # (w s)(t) = s(w^-1 t)
        num = _char_poly(weyl_apply(term.w.inverse(), t).character())
        for f in term.numerators:
            num = num * f
        for ch in all_chars:
            if ch not in term.den_chars:
                num = num * _binomial(ch)
        total = total + num
    return div_exact(total, common)


def spherical_value(t) -> RationalFn:
    """``omega_s(t^-1)`` for positive ``t`` as ``num / Q(1/p)``."""
    t = TorusExponent(*t) if not isinstance(t, TorusExponent) else t
    t = _check_positive(t)
    num = weyl_sum(t) * LaurentPoly.monomial(p=-rho(t))
    return RationalFn(num, _at_inverse_p(poincare_Q()))


def _check_index(m: int, l: int) -> None:
    if not (isinstance(m, int) and isinstance(l, int)) or not (l >= 2 * m >= 0):
        raise InvalidIndex(f"basic operator index ({m},{l}) needs l >= 2m >= 0")


@lru_cache(maxsize=None)
def basic_transform(m: int, l: int) -> LaurentPoly:
    """Spherical transform of the basic operator ``tau(m, l)``.

    ``tau(m, l)`` is the double coset of ``diag(1, p^m, p^l, p^(l-m))``,
    i.e. of ``T(0, m, l)``.  Equal to ``p^rho * W(t) / Q_t(1/p)``, which is
    ``vol * omega`` with the ``Q(1/p)`` factors cancelled up front.
    """
    _check_index(m, l)
    t = TorusExponent(0, m, l)
    scaled = weyl_sum(t) * LaurentPoly.monomial(p=rho(t))
    return div_exact(scaled, _at_inverse_p(stabilizer_Q_t(t)))
