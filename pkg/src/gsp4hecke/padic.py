"""Quaternions mod p^k, the isomorphism psi onto 2x2 matrices, Smith forms.

All arithmetic is at a fixed precision ``p^k``.  Matrices are tuples of
tuples of residues in ``[0, p^k)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidIndex, ModulusMismatch, PrecisionExhausted

Mat = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class QuatMod:
    """``a0 + a1 i + a2 j + a3 k`` with coordinates modulo ``p^k``."""

    a0: int
    a1: int
    a2: int
    a3: int
    p: int
    k: int

    def __post_init__(self):
        q = self.p**self.k
        for name in ("a0", "a1", "a2", "a3"):
            object.__setattr__(self, name, getattr(self, name) % q)

    @classmethod
    def of(cls, coords: Sequence[int], p: int, k: int) -> "QuatMod":
        return cls(*coords, p=p, k=k)

    @property
    def modulus(self) -> int:
        return self.p**self.k

    @property
    def coords(self) -> tuple[int, int, int, int]:
        return (self.a0, self.a1, self.a2, self.a3)

    def _same(self, other: "QuatMod") -> None:
        if (self.p, self.k) != (other.p, other.k):
            raise ModulusMismatch(f"p^k {self.p}^{self.k} vs {other.p}^{other.k}")

    def __add__(self, other: "QuatMod") -> "QuatMod":
        self._same(other)
        return QuatMod(*(x + y for x, y in zip(self.coords, other.coords)), p=self.p, k=self.k)

    def __sub__(self, other: "QuatMod") -> "QuatMod":
        self._same(other)
        return QuatMod(*(x - y for x, y in zip(self.coords, other.coords)), p=self.p, k=self.k)

    def __mul__(self, other):
        if isinstance(other, int):
            return QuatMod(*(x * other for x in self.coords), p=self.p, k=self.k)
        self._same(other)
        a0, a1, a2, a3 = self.coords
        b0, b1, b2, b3 = other.coords
        return QuatMod(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
            p=self.p,
            k=self.k,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QuatMod":
        out = QuatMod(1, 0, 0, 0, p=self.p, k=self.k)
        for _ in range(n):
            out = out * self
        return out

    def star(self) -> "QuatMod":
        return QuatMod(self.a0, self.a1, self.a2, -self.a3, p=self.p, k=self.k)

    def conj(self) -> "QuatMod":
        return QuatMod(self.a0, -self.a1, -self.a2, -self.a3, p=self.p, k=self.k)

    def prime(self) -> "QuatMod":
        return QuatMod(self.a0, -self.a1, -self.a2, self.a3, p=self.p, k=self.k)

    def norm(self) -> int:
        return sum(x * x for x in self.coords) % self.modulus

    def re(self) -> int:
        return self.a0


@dataclass(frozen=True)
class PsiParams:
    p: int
    k: int
    r: int
    s: int

    def __post_init__(self):
        if (self.r * self.r + self.s * self.s + 1) % self.p**self.k:
            raise ValueError("r^2 + s^2 + 1 is not 0 mod p^k")


def _check_odd_prime(p: int) -> None:
    if p < 3 or p % 2 == 0 or any(p % d == 0 for d in range(3, math.isqrt(p) + 1, 2)):
        raise InvalidIndex(f"{p} is not an odd prime")


def hensel_rs(p: int, k: int) -> PsiParams:
    """Lexicographically least ``(r, s)`` mod ``p`` lifted to ``r^2 + s^2 = -1 mod p^k``."""
    _check_odd_prime(p)
    if k < 1:
        raise InvalidIndex("precision k must be at least 1")
    r, s = next((r, s) for r in range(p) for s in range(p) if (r * r + s * s + 1) % p == 0)
    # Newton steps in whichever variable has a unit derivative
    lift_s = s % p != 0
    for j in range(2, k + 1):
        q = p**j
        f = r * r + s * s + 1
        if lift_s:
            s = (s - f * pow(2 * s, -1, q)) % q
        else:
            r = (r - f * pow(2 * r, -1, q)) % q
    return PsiParams(p, k, r % p**k, s % p**k)


def psi(a: QuatMod, params: PsiParams) -> Mat:
    if (a.p, a.k) != (params.p, params.k):
        raise ModulusMismatch(f"quaternion mod {a.p}^{a.k}, parameters mod {params.p}^{params.k}")
    q = a.modulus
    r, s = params.r, params.s
    a0, a1, a2, a3 = a.coords
    return (
        ((a0 + a1 * r + a2 * s) % q, (a3 - a2 * r + a1 * s) % q),
        ((-a3 - a2 * r + a1 * s) % q, (a0 - a1 * r - a2 * s) % q),
    )


# -- matrices mod q ------------------------------------------------------------


def mat_mul(x: Mat, y: Mat, q: int) -> Mat:
    n, inner, cols = len(x), len(y), len(y[0])
    return tuple(tuple(sum(x[i][t] * y[t][j] for t in range(inner)) % q for j in range(cols)) for i in range(n))


def mat_transpose(x: Mat) -> Mat:
    return tuple(zip(*x))


def mat_scale(x: Mat, c: int, q: int) -> Mat:
    return tuple(tuple(v * c % q for v in row) for row in x)


def mat_reduce(x: Sequence[Sequence[int]], q: int) -> Mat:
    return tuple(tuple(v % q for v in row) for row in x)


def identity(n: int) -> Mat:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def det2(x: Mat, q: int) -> int:
    return (x[0][0] * x[1][1] - x[0][1] * x[1][0]) % q


def adjugate2(x: Mat, q: int) -> Mat:
    return ((x[1][1] % q, -x[0][1] % q), (-x[1][0] % q, x[0][0] % q))


def inverse2(x: Mat, q: int) -> Mat:
    d = det2(x, q)
    return mat_scale(adjugate2(x, q), pow(d, -1, q), q)


def det_mod(x: Mat, q: int) -> int:
    """Determinant by cofactor expansion (sizes here are at most 4)."""
    n = len(x)
    if n == 1:
        return x[0][0] % q
    total = 0
    for j in range(n):
        minor = tuple(row[:j] + row[j + 1 :] for row in x[1:])
        total += (-1) ** j * x[0][j] * det_mod(minor, q)
    return total % q


def block(a: Mat, b: Mat, c: Mat, d: Mat) -> Mat:
    return tuple(ra + rb for ra, rb in zip(a, b)) + tuple(rc + rd for rc, rd in zip(c, d))


def symplectic_J(q: int) -> Mat:
    z, i = ((0, 0), (0, 0)), identity(2)
    return block(z, i, mat_scale(i, -1, q), z)


def psi_block(entries: Sequence[QuatMod], params: PsiParams) -> Mat:
    """4x4 image of the quaternionic 2x2 matrix ``[[a, b], [c, d]]``."""
    a, b, c, d = (psi(x, params) for x in entries)
    return block(a, b, c, d)


def similitude(m: Mat, q: int) -> int | None:
    """``mu`` with ``M J M^t = mu J`` mod ``q``, or ``None``."""
    J = symplectic_J(q)
    lhs = mat_mul(mat_mul(m, J, q), mat_transpose(m), q)
    mu = lhs[0][2]
    return mu if lhs == mat_scale(J, mu, q) else None


def valuation(x: int, p: int, cap: int) -> int:
    if x == 0:
        return cap
    v = 0
    while x % p == 0 and v < cap:
        x //= p
        v += 1
    return v


def smith_normal_form(m: Sequence[Sequence[int]], p: int, k: int) -> tuple[int, ...]:
    """p-adic valuations of the elementary divisors, ascending.

    Pivoting always takes an entry of least valuation, so every pivot
    divides the rest of its row and column over ``Z_p``.
    """
    q = p**k
    a = [list(row) for row in mat_reduce(m, q)]
    n, cols = len(a), len(a[0])
    out = []
    for t in range(min(n, cols)):
        best = None
        for i in range(t, n):
            for j in range(t, cols):
                v = valuation(a[i][j], p, k)
                if best is None or v < best[0]:
                    best = (v, i, j)
        v, i, j = best
        if v >= k:
            raise PrecisionExhausted(f"elementary divisor {t + 1} has valuation >= {k}")
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        # pivot = p^v * unit; scale the pivot row by the unit inverse
        unit_inv = pow(a[t][t] // p**v, -1, q)
        a[t] = [x * unit_inv % q for x in a[t]]
        for i2 in range(n):
            if i2 != t and a[i2][t]:
                f = a[i2][t] // p**v
                a[i2] = [(x - f * y) % q for x, y in zip(a[i2], a[t])]
        for j2 in range(cols):
            if j2 != t and a[t][j2]:
                f = a[t][j2] // p**v
                for row in a:
                    row[j2] = (row[j2] - f * row[t]) % q
        out.append(v)
    return tuple(sorted(out))


# -- the dictionary ------------------------------------------------------------


def find_alpha_hat(p: int) -> tuple[int, int, int, int]:
    """Integral quaternion of norm ``p`` with nonzero real part.

    Deterministic choice: smallest real part, then one with zero ``k``
    coordinate if there is any, then lexicographically least
    ``(b, c, d)`` with nonnegative entries.
    """
    _check_odd_prime(p)
    r = math.isqrt(p)
    for a in range(1, r + 1):
        sols = [
            (a, b, c, d)
            for b in range(r + 1)
            for c in range(r + 1)
            for d in range(r + 1)
            if a * a + b * b + c * c + d * d == p
        ]
        if sols:
            return min(sols, key=lambda t: (t[3] != 0, t[1:]))
    raise AssertionError(f"no four-square representation of {p} with a >= 1")


def g_matrix(p: int, m: int, l: int, k: int) -> tuple[QuatMod, QuatMod, QuatMod, QuatMod]:
    """``diag(ah^m, ah'^m p^(l-m))`` as quaternion entries mod ``p^k``."""
    ah = QuatMod.of(find_alpha_hat(p), p, k)
    zero = QuatMod(0, 0, 0, 0, p=p, k=k)
    return (ah**m, zero, zero, (ah.prime() ** m) * p ** (l - m))


@dataclass(frozen=True)
class DictionaryReport:
    p: int
    m: int
    l: int
    k: int
    alpha_hat: tuple[int, int, int, int]
    similitude_valuation: int | None
    smith_valuations: tuple[int, ...]
    expected_valuations: tuple[int, ...]

    @property
    def symplectic_ok(self) -> bool:
        return self.similitude_valuation == self.l

    @property
    def smith_ok(self) -> bool:
        return self.smith_valuations == self.expected_valuations

    @property
    def passed(self) -> bool:
        return self.symplectic_ok and self.smith_ok


def verify_dictionary(p: int, m: int, l: int, k: int = 6) -> DictionaryReport:
    if not l >= 2 * m >= 0:
        raise InvalidIndex(f"index ({m},{l}) needs l >= 2m >= 0")
    if k <= l:
        raise PrecisionExhausted(f"precision k={k} must exceed l={l}")
    params = hensel_rs(p, k)
    q = p**k
    image = psi_block(g_matrix(p, m, l, k), params)
    mu = similitude(image, q)
    mu_val = None if mu is None else valuation(mu, p, k)
    return DictionaryReport(
        p,
        m,
        l,
        k,
        find_alpha_hat(p),
        mu_val,
        smith_normal_form(image, p, k),
        tuple(sorted((0, m, l - m, l))),
    )
