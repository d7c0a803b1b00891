"""Exact linear solves over fractions of Laurent polynomials.

Fraction-free Gauss-Jordan elimination (Bareiss).  Every intermediate entry
is a minor of the cleared input, so each division by the previous pivot is
exact; ``div_exact`` enforces that.
"""

from __future__ import annotations

from typing import Sequence, Union

from .algebra import ONE, LaurentPoly, RationalFn, div_exact
from .errors import Inconsistent, Underdetermined

Entry = Union[int, LaurentPoly, RationalFn]


def _split(x: Entry) -> tuple[LaurentPoly, LaurentPoly]:
    if isinstance(x, RationalFn):
        return x.num, x.den
    if isinstance(x, int):
        return LaurentPoly.const(x), ONE
    return x, ONE


def _cleared_rows(system: Sequence[Sequence[Entry]], rhs: Sequence[Entry]) -> list[list[LaurentPoly]]:
    rows = []
    for row, b in zip(system, rhs):
        pairs = [_split(x) for x in row] + [_split(b)]
        dens = []
        for _, d in pairs:
            if d != ONE and d not in dens:
                dens.append(d)
        common = ONE
        for d in dens:
            common = common * d
        rows.append([n * div_exact(common, d) for n, d in pairs])
    return rows


def solve_linear(system: Sequence[Sequence[Entry]], rhs: Sequence[Entry]) -> list[RationalFn]:
    """Solve ``system @ x == rhs`` exactly.

    ``system`` may have more rows than columns; the extra equations must be
    consistent.  Returns one ``RationalFn`` per unknown, all sharing the
    final Bareiss pivot as denominator.
    """
    if len(system) != len(rhs):
        raise ValueError("row count of system and rhs differ")
    if not system:
        return []
    ncols = len(system[0])
    if any(len(r) != ncols for r in system):
        raise ValueError("ragged system")
    a = _cleared_rows(system, rhs)
    nrows = len(a)
    prev = ONE
    pivot_rows: list[int] = []
    used = [False] * nrows
    for k in range(ncols):
        piv = next((i for i in range(nrows) if not used[i] and not a[i][k].is_zero()), None)
        if piv is None:
            raise Underdetermined(f"no pivot for unknown {k}")
        used[piv] = True
        pivot_rows.append(piv)
        pk = a[piv]
        akk = pk[k]
        for i in range(nrows):
            if i == piv:
                continue
            ai = a[i]
            aik = ai[k]
            # Gauss-Jordan: columns already pivoted stay diagonal, so they
            # are rescaled too and remain exactly divisible by ``prev``.
            new = []
            for j in range(ncols + 1):
                v = akk * ai[j] - aik * pk[j]
                new.append(div_exact(v, prev) if prev != ONE else v)
            a[i] = new
        prev = akk
    for i in range(nrows):
        if not used[i] and not a[i][ncols].is_zero():
            raise Inconsistent(f"equation {i} reduces to 0 = {a[i][ncols]}")
    # every pivot row now carries the same diagonal entry (the determinant)
    return [RationalFn(a[r][ncols], a[r][k]) for k, r in enumerate(pivot_rows)]


def solve_exact(system: Sequence[Sequence[Entry]], rhs: Sequence[Entry]) -> list[LaurentPoly]:
    """``solve_linear`` followed by exact reduction of every component."""
    return [x.reduce() for x in solve_linear(system, rhs)]


__all__ = ["solve_linear", "solve_exact"]
