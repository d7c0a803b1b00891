"""Bounds for Hecke operators restricted to the conjugated copy of H.

The basic bound of ``tau(m, l)`` sums ``p^(2 |nu|_H)`` over the Weyl
images ``nu`` of its torus element that fall in the diagonal torus of H.
For ``m > 0`` no image does, so the bound vanishes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .algebra import ZERO, LaurentPoly, print_canonical
from .errors import InvalidIndex, SamePrime
from .hecke import HeckeElement
from .rootdatum import TorusExponent, h_torus_member, norm_star_H, orbit

NEG_INF = float("-inf")


@dataclass(frozen=True)
class HNormBound:
    """Exact upper bound, polynomial in ``p`` with nonnegative coefficients."""

    value: LaurentPoly
    leading_degree: Union[int, float]  # NEG_INF for the zero bound

    @classmethod
    def of(cls, value: LaurentPoly) -> "HNormBound":
        if any(c < 0 for _, c in value.items()):
            raise ValueError(f"bound {value} has a negative coefficient")
        return cls(value, NEG_INF if value.is_zero() else value.p_degree())

    @property
    def is_zero(self) -> bool:
        return self.value.is_zero()

    def at(self, p: int) -> int:
        return int(self.value.evaluate_p(p))

    def __str__(self) -> str:
        return print_canonical(self.value)


def h_orbit_members(m: int, l: int) -> list[TorusExponent]:
    """Distinct Weyl images of ``T(0, m, l)`` lying in the torus of H."""
    return [u for u in orbit(TorusExponent(0, m, l)) if h_torus_member(u)]


def basic_h_bound(m: int, l: int) -> HNormBound:
    if not (isinstance(m, int) and isinstance(l, int)) or not (l >= 2 * m >= 0):
        raise InvalidIndex(f"basic operator index ({m},{l}) needs l >= 2m >= 0")
    total = ZERO
    for u in h_orbit_members(m, l):
        total = total + LaurentPoly.monomial(p=2 * norm_star_H(u.l))
    return HNormBound.of(total)


@dataclass(frozen=True)
class ElementBound:
    symbolic: HNormBound
    numeric: int
    p: int


def element_h_bound(h: HeckeElement, p_value: int) -> ElementBound:
    """Triangle-inequality bound ``sum |c(0, l)| * basic_h_bound(0, l)``.

    ``symbolic`` uses coefficientwise absolute values (valid for every
    ``p``); ``numeric`` uses the true absolute value at ``p_value``.
    """
    symbolic = ZERO
    numeric = 0
    for (m, l), c in h.sorted_items():
        if m != 0:
            continue
        basic = basic_h_bound(m, l)
        symbolic = symbolic + c.coefficientwise_abs() * basic.value
        numeric += abs(int(c.evaluate_p(p_value))) * basic.at(p_value)
    return ElementBound(HNormBound.of(symbolic), numeric, p_value)


def cross_prime_bound(b1: ElementBound, b2: ElementBound) -> int:
    """Bound for a product of operators at two distinct primes."""
    if b1.p == b2.p:
        raise SamePrime(f"both bounds are at p = {b1.p}")
    return b1.numeric * b2.numeric


def _sieve(n: int) -> bytearray:
    flags = bytearray([1]) * (n + 1)
    flags[0:2] = b"\x00\x00"[: min(2, n + 1)]
    for i in range(2, math.isqrt(n) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return flags


def primes_between(lo: int, hi: int) -> list[int]:
    if hi < 2 or hi < lo:
        return []
    flags = _sieve(hi)
    return [q for q in range(max(lo, 2), hi + 1) if flags[q]]


def good_primes(P: int, window_factor: Union[int, Fraction] = 2, g_rational: bool = True) -> list[int]:
    """Primes ``p = 3 (mod 4)`` in ``[P, window_factor * P]``.

    Only the rational case is available, where good means ``p = 3 (mod 4)``.
    """
    if not g_rational:
        raise NotImplementedError("splitting conditions for irrational g are not implemented")
    if P < 3:
        raise ValueError("P must be at least 3")
    hi = math.floor(Fraction(window_factor) * P)
    return [q for q in primes_between(P, hi) if q % 4 == 3]
