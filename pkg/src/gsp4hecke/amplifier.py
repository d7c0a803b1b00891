"""Numerical simulation of the amplifier built from T2 or sigma over a prime window.

Eigenvalues follow from a profile ``p -> lambda(p)``; norms come from the
exact bounds in ``bounds``.  Profiles are synthetic or read from a file.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Callable, Iterable, Mapping, Sequence

from .bounds import element_h_bound, good_primes
from .errors import EmptyWindow, UsageError
from .hecke import HeckeElement, decompose_expr

# Smallest power of ten at which both per-prime inequalities hold for
# every prime above it (|Lambda2| fails for 101 <= p <= 113).
P_MIN = 1000
SMALL_EIGENVALUE = Fraction(1, 10)
DEFAULT_CAP = 3.0


def lambda1(p: int, lam: float) -> float:
    return p * (math.sqrt(p) * lam + p + 1)


def lambda2(p: int, lam: float) -> float:
    return (p + 1) * (p**1.5 * lam + p - 1)


def lambda_sigma(p: int, lam: float) -> float:
    return lambda2(p, lam) ** 2 - (p + 1) * lambda1(p, lam) ** 2


# -- profiles ------------------------------------------------------------------

Sampler = Callable[[random.Random, int], float]


def parse_distribution(text: str) -> Sampler:
    """``constant:c``, ``uniform:a,b``, ``bimodal:c1,c2`` or ``alternating:c1,c2``.

    ``bimodal`` picks one of its two values at random per prime;
    ``alternating`` uses the parity of the prime's index in the window.
    """
    kind, _, rest = text.partition(":")
    try:
        args = [float(x) for x in rest.strip("[] ").split(",")] if rest else []
    except ValueError as exc:
        raise UsageError(f"bad distribution parameters in {text!r}") from exc
    want = {"constant": 1, "uniform": 2, "bimodal": 2, "alternating": 2}
    if kind not in want or len(args) != want[kind]:
        raise UsageError(f"unknown distribution {text!r}")
    if kind == "constant":
        return lambda rng, i: args[0]
    if kind == "uniform":
        lo, hi = args
        return lambda rng, i: rng.uniform(lo, hi)
    if kind == "bimodal":
        return lambda rng, i: args[rng.randrange(2)]
    return lambda rng, i: args[i % 2]


@dataclass(frozen=True)
class EigenvalueProfile:
    values: Mapping[int, float]
    cap: float = DEFAULT_CAP

    def __post_init__(self):
        for p, lam in self.values.items():
            if not abs(lam) <= self.cap:
                raise UsageError(f"|lambda({p})| = {abs(lam)} exceeds cap {self.cap}")

    def __getitem__(self, p: int) -> float:
        try:
            return self.values[p]
        except KeyError:
            raise UsageError(f"profile has no eigenvalue for p = {p}") from None

    @classmethod
    def synthetic(cls, primes: Iterable[int], distribution: str, seed: int = 0, cap: float = DEFAULT_CAP):
        sample = parse_distribution(distribution)
        rng = random.Random(seed)
        return cls({p: sample(rng, i) for i, p in enumerate(sorted(primes))}, cap)

    @classmethod
    def from_file(cls, path, cap: float = DEFAULT_CAP) -> "EigenvalueProfile":
        """Lines ``<prime> <lambda>``; blank lines and ``#`` comments are skipped."""
        values = {}
        for n, line in enumerate(Path(path).read_text().splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise UsageError(f"{path}:{n}: expected '<prime> <lambda>'")
            try:
                values[int(parts[0])] = float(parts[1])
            except ValueError as exc:
                raise UsageError(f"{path}:{n}: {exc}") from exc
        return cls(values, cap)


@dataclass(frozen=True)
class ProfileFamily:
    """A distribution together with the seeds it is drawn with."""

    distribution: str
    seeds: tuple[int, ...] = (0,)
    cap: float = DEFAULT_CAP

    def profiles(self, primes: Sequence[int]) -> list[EigenvalueProfile]:
        return [EigenvalueProfile.synthetic(primes, self.distribution, s, self.cap) for s in self.seeds]


# -- the amplifier -------------------------------------------------------------


@lru_cache(maxsize=None)
def _operator(tag: str) -> tuple[HeckeElement, HeckeElement]:
    return decompose_expr(tag), decompose_expr(f"{tag}^2")


def operator_bounds(tag: str, p: int) -> tuple[int, int]:
    """Exact bounds for ``op(p)`` and ``op(p)^2`` at ``p``."""
    op, sq = _operator(tag)
    return element_h_bound(op, p).numeric, element_h_bound(sq, p).numeric


def _sign(x: float) -> int:
    return (x > 0) - (x < 0)


def _descending_sum(xs: Iterable[float]) -> float:
    total = 0.0
    for x in sorted(xs, key=abs, reverse=True):
        total += x
    return total


@dataclass(frozen=True)
class AmplifierReport:
    P: int
    case_taken: int
    operator: str
    primes: tuple[int, ...]
    small_set: tuple[int, ...]
    coefficients: Mapping[int, int]
    eigenvalues: Mapping[int, float]
    L_value: float
    norm_bound: int
    ratio: float
    lambdas: Mapping[int, float] = field(repr=False, default_factory=dict)

    @property
    def selected(self) -> tuple[int, ...]:
        return tuple(p for p in self.primes if self.coefficients[p] != 0)


def build_amplifier(
    profile: EigenvalueProfile, P: int, p_min: int = P_MIN, window_factor: Fraction | int = 2
) -> AmplifierReport:
    if P < p_min:
        raise UsageError(f"P = {P} is below the validated threshold {p_min}")
    primes = tuple(good_primes(P, window_factor))
    if not primes:
        raise EmptyWindow(f"no good primes in [{P}, {window_factor} * {P}]")
    lams = {p: profile[p] for p in primes}
    small = tuple(p for p in primes if abs(Fraction(lams[p])) <= SMALL_EIGENVALUE)
    if 2 * len(small) < len(primes):
        case, tag = 1, "T2"
        eig = {p: lambda2(p, lams[p]) for p in primes}
        coeff = {p: 0 if p in small else _sign(eig[p]) for p in primes}
    else:
        case, tag = 2, "sigma"
        eig = {p: lambda_sigma(p, lams[p]) for p in primes}
        coeff = {p: -1 if p in small else 0 for p in primes}
    chosen = [p for p in primes if coeff[p]]
    L = _descending_sum(coeff[p] * eig[p] for p in chosen) ** 2
    single, square = 0, 0
    singles_sq = 0
    for p in chosen:
        b1, b2 = operator_bounds(tag, p)
        square += b2
        single += b1
        singles_sq += b1 * b1
    # sum over ordered pairs p != q of b1(p) b1(q)
    norm = square + single * single - singles_sq
    ratio = norm / L if L else math.inf
    return AmplifierReport(P, case, tag, primes, small, coeff, eig, L, norm, ratio, lams)


def exact_ratio(report: AmplifierReport, digits: int = 60) -> Decimal:
    """The report's ratio recomputed in high-precision decimal arithmetic.

    The norm bound is already an exact integer; only the eigenvalue sum
    needs square roots of ``p``.
    """
    with localcontext() as ctx:
        ctx.prec = digits
        total = Decimal(0)
        for p in report.selected:
            lam = Decimal(report.lambdas[p])
            rp = Decimal(p).sqrt()
            l1 = p * (rp * lam + p + 1)
            l2 = (p + 1) * (p * rp * lam + p - 1)
            eig = l2 if report.operator == "T2" else l2 * l2 - (p + 1) * l1 * l1
            total += report.coefficients[p] * eig
        return Decimal(report.norm_bound) / (total * total)


@dataclass(frozen=True)
class SweepRow:
    P: int
    worst_ratio: float
    reference: float
    cases: tuple[int, ...]

    @property
    def empirical_constant(self) -> float:
        return self.worst_ratio / self.reference


def ratio_sweep(family: ProfileFamily, P_list: Sequence[int]) -> list[SweepRow]:
    """Worst ratio over the family at each ``P`` next to ``log P / P``."""
    if list(P_list) != sorted(P_list):
        raise UsageError("P_list must be ascending")
    rows = []
    for P in P_list:
        primes = good_primes(P)
        reports = [build_amplifier(prof, P) for prof in family.profiles(primes)]
        rows.append(
            SweepRow(P, max(r.ratio for r in reports), math.log(P) / P, tuple(r.case_taken for r in reports))
        )
    return rows
