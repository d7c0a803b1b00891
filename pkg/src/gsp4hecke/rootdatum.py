"""Torus lattice, roots, coroots and Weyl group for PGSp4.

``T(n, m, l)`` stands for ``diag(p^n, p^m, p^(l-n), p^(l-m))`` modulo the
center ``(1, 1, 2)``.  The canonical representative has ``n = 0``; its
remaining coordinates ``(m - n, l - 2n)`` are exactly the ``(Y, Z)``
exponents of the corresponding character value ``s(T)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Matrix3 = tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]]
Matrix2 = tuple[tuple[int, int], tuple[int, int]]


@dataclass(frozen=True, order=True)
class TorusExponent:
    n: int
    m: int
    l: int

    def canonical(self) -> "TorusExponent":
        return TorusExponent(0, self.m - self.n, self.l - 2 * self.n)

    def character(self) -> tuple[int, int]:
        """``(Y, Z)`` exponents of ``s(T)``."""
        return (self.m - self.n, self.l - 2 * self.n)

    @classmethod
    def from_character(cls, i: int, j: int) -> "TorusExponent":
        return cls(0, i, j)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.n, self.m, self.l)

    def __add__(self, other: "TorusExponent") -> "TorusExponent":
        return TorusExponent(self.n + other.n, self.m + other.m, self.l + other.l)

    def __neg__(self) -> "TorusExponent":
        return TorusExponent(-self.n, -self.m, -self.l)

    def __str__(self) -> str:
        return f"T({self.n},{self.m},{self.l})"


def _as_torus(t) -> TorusExponent:
    return t if isinstance(t, TorusExponent) else TorusExponent(*t)


# -- roots and coroots ---------------------------------------------------------

ROOTS = (
    lambda n, m, l: m - n,
    lambda n, m, l: l - 2 * n,
    lambda n, m, l: l - n - m,
    lambda n, m, l: l - 2 * m,
)

COROOTS = (
    TorusExponent(-1, 1, 0),
    TorusExponent(-1, 0, 0),
    TorusExponent(-1, -1, 0),
    TorusExponent(0, -1, 0),
)


def root_values(t) -> tuple[int, int, int, int]:
    t = _as_torus(t)
    return tuple(a(t.n, t.m, t.l) for a in ROOTS)


def pairing(i: int, t) -> int:
    """``<alpha_i, t>`` for ``i`` in 1..4."""
    t = _as_torus(t)
    return ROOTS[i - 1](t.n, t.m, t.l)


def is_positive(t) -> bool:
    """All positive roots are nonnegative on ``t`` (i.e. ``n <= m <= l/2``)."""
    return all(v >= 0 for v in root_values(t))


def rho(t) -> Fraction:
    t = _as_torus(t)
    return Fraction(3 * t.l - 2 * t.m - 4 * t.n, 2)


# -- Weyl group ----------------------------------------------------------------

# action on (n, m, l) column vectors; n, m, l are the exponents of u1, u2, u0
_GENERATORS: dict[str, Matrix3] = {
    "s": ((0, 1, 0), (1, 0, 0), (0, 0, 1)),  # u1 <-> u2
    "a": ((-1, 0, 1), (0, 1, 0), (0, 0, 1)),  # u1 -> u0/u1
    "b": ((1, 0, 0), (0, -1, 1), (0, 0, 1)),  # u2 -> u0/u2
}


def _matmul3(x: Matrix3, y: Matrix3) -> Matrix3:
    return tuple(
        tuple(sum(x[i][k] * y[k][j] for k in range(3)) for j in range(3)) for i in range(3)
    )


_IDENTITY3: Matrix3 = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


@dataclass(frozen=True)
class WeylElement:
    """An element of the order-8 Weyl group, acting linearly on ``(n, m, l)``.

    ``word`` is a shortest word in the generators ``s``, ``a``, ``b``
    (empty for the identity).
    """

    word: str
    matrix: Matrix3

    def apply(self, t) -> TorusExponent:
        return weyl_apply(self, t)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return _by_matrix()[_matmul3(self.matrix, other.matrix)]

    def inverse(self) -> "WeylElement":
        for w in weyl_group():
            if _matmul3(self.matrix, w.matrix) == _IDENTITY3:
                return w
        raise AssertionError("Weyl group not closed under inversion")

    @property
    def is_identity(self) -> bool:
        return self.matrix == _IDENTITY3

    def __str__(self) -> str:
        return self.word or "e"


@lru_cache(maxsize=None)
def weyl_group() -> tuple[WeylElement, ...]:
    """All 8 elements, breadth-first from the identity (deterministic order)."""
    seen = {_IDENTITY3: ""}
    frontier = [_IDENTITY3]
    while frontier:
        nxt = []
        for mat in frontier:
            for name, g in _GENERATORS.items():
                prod = _matmul3(g, mat)
                if prod not in seen:
                    seen[prod] = name + seen[mat]
                    nxt.append(prod)
        frontier = nxt
    return tuple(WeylElement(word, mat) for mat, word in seen.items())


@lru_cache(maxsize=None)
def _by_matrix() -> dict[Matrix3, WeylElement]:
    return {w.matrix: w for w in weyl_group()}


def generators() -> tuple[WeylElement, ...]:
    table = _by_matrix()
    return tuple(table[g] for g in _GENERATORS.values())


def identity() -> WeylElement:
    return _by_matrix()[_IDENTITY3]


def weyl_apply(w: WeylElement, t) -> TorusExponent:
    """``w . t``, returned center-canonical."""
    v = _as_torus(t).as_tuple()
    r = tuple(sum(w.matrix[i][k] * v[k] for k in range(3)) for i in range(3))
    return TorusExponent(*r).canonical()


@lru_cache(maxsize=None)
def monomial_matrix(w: WeylElement) -> Matrix2:
    """2x2 integer matrix of ``w`` on ``(Y, Z)`` exponents.

    Derived from ``weyl_apply`` on the two basis characters; the action is
    linear because ``w`` fixes the center direction.
    """
    c1 = weyl_apply(w, TorusExponent(0, 1, 0)).character()
    c2 = weyl_apply(w, TorusExponent(0, 0, 1)).character()
    return ((c1[0], c2[0]), (c1[1], c2[1]))


def weyl_monomial_action(w: WeylElement, mono: tuple[int, int]) -> tuple[int, int]:
    """Character exponents of ``w . T`` where ``T`` has character ``mono``.

    As functions of ``s`` this is ``s -> s(w T) = (w^-1 s)(T)``.
    """
    (a, b), (c, d) = monomial_matrix(w)
    i, j = mono
    return (a * i + b * j, c * i + d * j)


def orbit(t) -> list[TorusExponent]:
    """Distinct center-canonical images of ``t``, in Weyl-group order."""
    out: list[TorusExponent] = []
    for w in weyl_group():
        u = weyl_apply(w, t)
        if u not in out:
            out.append(u)
    return out


def stabilizer(t) -> list[WeylElement]:
    c = _as_torus(t).canonical()
    return [w for w in weyl_group() if weyl_apply(w, c) == c]


def positive_representative(t) -> TorusExponent:
    for u in orbit(t):
        if is_positive(u):
            return u
    raise AssertionError(f"orbit of {t} has no positive element")


def norm_star_G(t) -> Fraction:
    """``max_w <rho, w.t>`` over the Weyl group."""
    return max(rho(weyl_apply(w, t)) for w in weyl_group())


def norm_star_H(l: int) -> int:
    """Norm of the cocharacter ``diag(1, p^l)`` of the diagonal torus of H."""
    return abs(l)


def h_torus_member(t) -> bool:
    """Whether ``t`` is center-equivalent to ``diag(1, 1, p^l, p^l)``."""
    c = _as_torus(t).canonical()
    return c.m == 0
