"""Sparse Laurent polynomials in ``p``, ``Y``, ``Z`` with integer coefficients.

A monomial is stored as a plain tuple ``(hp, y, z)`` where ``hp`` is *twice*
the exponent of ``p``.  Spherical transforms of double cosets with odd
similitude valuation carry a factor ``p^(k/2)``; keeping the exponent in
half-steps lets those live in the same ring as everything else.  All other
public entry points take and return the true exponent (``int`` or
``Fraction``).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Union

from .errors import NotDivisible, ParseError

Mono = tuple[int, int, int]
Exponent = Union[int, Fraction]

__all__ = [
    "LaurentPoly",
    "RationalFn",
    "P",
    "Y",
    "Z",
    "ONE",
    "ZERO",
    "parse",
    "print_canonical",
    "div_exact",
    "p_exponent",
    "print_key",
]


def _half(e: Exponent) -> int:
    twice = Fraction(e) * 2
    if twice.denominator != 1:
        raise ValueError(f"p-exponent {e} is not a multiple of 1/2")
    return int(twice)


def p_exponent(mono: Mono) -> Exponent:
    """True exponent of ``p`` in a stored monomial."""
    hp = mono[0]
    return hp // 2 if hp % 2 == 0 else Fraction(hp, 2)


def print_key(mono: Mono) -> tuple[int, int, int]:
    """Sort key of the canonical order (largest first).

    Total (Y, Z)-degree, then the Y-exponent, then the p-exponent.
    """
    return (mono[1] + mono[2], mono[1], mono[0])


class LaurentPoly:
    """Immutable sparse Laurent polynomial.  No zero coefficient is ever stored."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Mono, int] | None = None):
        if terms:
            self._terms = {m: int(c) for m, c in terms.items() if c}
        else:
            self._terms = {}
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> "LaurentPoly":
        # caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({(0, 0, 0): c})

    @classmethod
    def monomial(cls, coeff: int = 1, p: Exponent = 0, y: int = 0, z: int = 0) -> "LaurentPoly":
        return cls({(_half(p), y, z): coeff})

    @classmethod
    def from_p_coeffs(cls, coeffs: Iterable[int], sign: int = 1) -> "LaurentPoly":
        """``sum(c_k * p^(sign*k))`` for a coefficient list indexed by ``k``."""
        return cls({(2 * sign * k, 0, 0): c for k, c in enumerate(coeffs)})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> Mapping[Mono, int]:
        return self._terms

    def items(self) -> Iterator[tuple[Mono, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_p_only(self) -> bool:
        return all(m[1] == 0 and m[2] == 0 for m in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def has_half_powers(self) -> bool:
        return any(m[0] % 2 for m in self._terms)

    def coefficient(self, p: Exponent = 0, y: int = 0, z: int = 0) -> int:
        return self._terms.get((_half(p), y, z), 0)

    def sorted_terms(self) -> list[tuple[Mono, int]]:
        return sorted(self._terms.items(), key=lambda t: print_key(t[0]), reverse=True)

    def leading(self) -> tuple[Mono, int]:
        """Largest term in the canonical order."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self._terms, key=print_key)
        return m, self._terms[m]

    def p_degree(self) -> Exponent:
        """Top exponent of ``p`` (raises on zero)."""
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return p_exponent((max(m[0] for m in self._terms), 0, 0))

    def p_low_degree(self) -> Exponent:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return p_exponent((min(m[0] for m in self._terms), 0, 0))

    def by_character(self) -> dict[tuple[int, int], "LaurentPoly"]:
        """Group by ``(Y, Z)``-exponent; values are polynomials in ``p`` only."""
        out: dict[tuple[int, int], dict] = {}
        for (hp, y, z), c in self._terms.items():
            out.setdefault((y, z), {})[(hp, 0, 0)] = c
        return {k: LaurentPoly._wrap(v) for k, v in out.items()}

    def p_coefficients(self) -> dict[Exponent, int]:
        """Exponent -> coefficient map of a polynomial in ``p`` alone."""
        if not self.is_p_only():
            raise ValueError("not a polynomial in p alone")
        return {p_exponent(m): c for m, c in self._terms.items()}

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return LaurentPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return LaurentPoly._wrap({m: c * other for m, c in self._terms.items()})
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for (a0, a1, a2), ca in self._terms.items():
            for (b0, b1, b2), cb in other._terms.items():
                key = (a0 + b0, a1 + b1, a2 + b2)
                out[key] = out.get(key, 0) + ca * cb
        return LaurentPoly._wrap({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if self.is_monomial():
                ((m, c),) = self._terms.items()
                if c in (1, -1):
                    return LaurentPoly._wrap({(m[0] * k, m[1] * k, m[2] * k): c ** (-k)})
            raise ValueError("negative power of a non-unit")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({print_canonical(self)!r})"

    def __str__(self):
        return print_canonical(self)

    # -- transformations ----------------------------------------------------

    def map_monomials(self, fn: Callable[[Mono], Mono]) -> "LaurentPoly":
        """Apply an injective exponent map to every monomial."""
        out: dict = {}
        for m, c in self._terms.items():
            key = fn(m)
            out[key] = out.get(key, 0) + c
        return LaurentPoly({k: v for k, v in out.items() if v})

    def coefficientwise_abs(self) -> "LaurentPoly":
        return LaurentPoly._wrap({m: abs(c) for m, c in self._terms.items()})

    def invert_p(self) -> "LaurentPoly":
        """Substitute ``p -> 1/p``."""
        return LaurentPoly._wrap({(-m[0], m[1], m[2]): c for m, c in self._terms.items()})

    def evaluate_p(self, p: int) -> Union[int, Fraction]:
        """Exact value of a polynomial in ``p`` alone at an integer ``p``.

        Half-integer powers are not exact rationals and raise ``ValueError``.
        """
        if not self.is_p_only():
            raise ValueError("not a polynomial in p alone")
        total = Fraction(0)
        for (hp, _, _), c in self._terms.items():
            if hp % 2:
                raise ValueError("half-integer power of p has no exact rational value")
            e = hp // 2
            total += c * (Fraction(p) ** e)
        return int(total) if total.denominator == 1 else total

    def evaluate(self, p: float, y: complex = 1.0, z: complex = 1.0) -> complex:
        """Floating-point evaluation (testing and plotting only)."""
        return sum(c * p ** (hp / 2) * y**ey * z**ez for (hp, ey, ez), c in self._terms.items())


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    return NotImplemented


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
P = LaurentPoly.monomial(p=1)
Y = LaurentPoly.monomial(y=1)
Z = LaurentPoly.monomial(z=1)


def div_exact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Return ``q`` with ``q * b == a`` or raise ``NotDivisible``.

    Division by leading terms in the lexicographic order on the stored
    exponent tuple.  In any exact quotient every exponent coordinate lies in
    the box ``[low(a) - low(b), high(a) - high(b)]``; leaving that box proves
    non-divisibility and also bounds the loop.
    """
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return ZERO
    bt = b.terms
    lt_b = max(bt)
    lc_b = bt[lt_b]
    lo = [min(m[i] for m in a.terms) - min(m[i] for m in bt) for i in range(3)]
    hi = [max(m[i] for m in a.terms) - max(m[i] for m in bt) for i in range(3)]
    rem = dict(a.terms)
    quot: dict = {}
    while rem:
        m = max(rem)
        c = rem[m]
        qm = (m[0] - lt_b[0], m[1] - lt_b[1], m[2] - lt_b[2])
        if any(qm[i] < lo[i] or qm[i] > hi[i] for i in range(3)):
            raise NotDivisible(f"{a} is not divisible by {b}")
        qc, r = divmod(c, lc_b)
        if r:
            raise NotDivisible(f"coefficient {c} not divisible by {lc_b}")
        quot[qm] = qc
        for (b0, b1, b2), cb in bt.items():
            key = (qm[0] + b0, qm[1] + b1, qm[2] + b2)
            v = rem.get(key, 0) - qc * cb
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    return LaurentPoly._wrap(quot)


class RationalFn:
    """``num / den`` without gcd reduction; equality by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly = ONE):
        num, den = _coerce(num), _coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    def __add__(self, other):
        other = _as_fn(other)
        if self.den == other.den:
            return RationalFn(self.num + other.num, self.den)
        return RationalFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFn(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_as_fn(other))

    def __rsub__(self, other):
        return _as_fn(other) - self

    def __mul__(self, other):
        other = _as_fn(other)
        return RationalFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_fn(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFn(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        if not isinstance(other, (RationalFn, LaurentPoly, int)):
            return NotImplemented
        other = _as_fn(other)
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def reduce(self) -> LaurentPoly:
        """Exact quotient as a Laurent polynomial (``NotDivisible`` otherwise)."""
        return div_exact(self.num, self.den)

    def __repr__(self):
        return f"RationalFn(({self.num}) / ({self.den}))"


def _as_fn(x) -> RationalFn:
    if isinstance(x, RationalFn):
        return x
    return RationalFn(_coerce(x))


# -- printing ------------------------------------------------------------------


def _fmt_p(hp: int) -> str:
    if hp % 2 == 0:
        e = hp // 2
        return "p" if e == 1 else f"p^{e}"
    return f"p^({hp}/2)"


def _fmt_monomial(m: Mono) -> str:
    parts = []
    if m[0]:
        parts.append(_fmt_p(m[0]))
    for name, e in (("Y", m[1]), ("Z", m[2])):
        if e:
            parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def print_canonical(a: LaurentPoly) -> str:
    """Deterministic text form; see ``print_key`` for the term order."""
    if a.is_zero():
        return "0"
    out = []
    for i, (m, c) in enumerate(a.sorted_terms()):
        sign = "-" if c < 0 else ("+" if i else "")
        mag = abs(c)
        body = _fmt_monomial(m)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        out.append(sign + text)
    return "".join(out)


# -- parsing -------------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<var>[pYZ])|(?P<op>[-+*^(){}/]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        mt = _TOKEN.match(text, pos)
        if not mt:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = mt.lastgroup
        start = mt.start(kind)
        toks.append((kind, mt.group(kind), start))
        pos = mt.end()
    toks.append(("end", "", n))
    return toks


class _PolyParser:
    """Recursive descent over the polynomial grammar.

    Exponents may be written ``^-2``, ``^{-2}`` (so LaTeX listings parse
    after dropping backslashes) or, for ``p`` only, ``^(3/2)``.
    """

    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, value: str):
        t = self.take()
        if t[1] != value:
            raise ParseError(f"expected {value!r}, found {t[1] or 'end of input'!r}", t[2])
        return t

    def parse(self) -> LaurentPoly:
        terms: dict = {}
        first = True
        while True:
            t = self.peek()
            sign = 1
            if t[1] in "+-" and t[0] == "op":
                self.take()
                sign = -1 if t[1] == "-" else 1
            elif not first:
                break
            coeff, mono = self.term()
            first = False
            key = mono
            v = terms.get(key, 0) + sign * coeff
            if v:
                terms[key] = v
            else:
                terms.pop(key, None)
        t = self.peek()
        if t[0] != "end":
            raise ParseError(f"unexpected token {t[1]!r}", t[2])
        return LaurentPoly._wrap(terms)

    def term(self) -> tuple[int, Mono]:
        t = self.peek()
        coeff = 1
        seen = False
        if t[0] == "int":
            self.take()
            coeff = int(t[1])
            seen = True
        exps = [0, 0, 0]
        while True:
            t = self.peek()
            if t[1] == "*" and t[0] == "op":
                if not seen:
                    raise ParseError("term cannot start with '*'", t[2])
                self.take()
                t = self.peek()
                if t[0] == "int":
                    # "2*3" style numeric factor
                    self.take()
                    coeff *= int(t[1])
                    seen = True
                    continue
                if t[0] != "var":
                    raise ParseError("expected a variable after '*'", t[2])
            elif t[0] != "var":
                break
            self.take()
            idx = "pYZ".index(t[1])
            e = self.exponent(allow_half=(idx == 0))
            exps[idx] += e
            seen = True
        if not seen:
            raise ParseError("empty term", t[2])
        return coeff, (exps[0], exps[1], exps[2])

    def exponent(self, allow_half: bool) -> int:
        # returns the stored exponent: doubled for p
        scale = 2 if allow_half else 1
        t = self.peek()
        if t[1] != "^":
            return scale
        self.take()
        t = self.peek()
        closer = None
        if t[1] in ("{", "("):
            self.take()
            closer = "}" if t[1] == "{" else ")"
        value = self.signed_int()
        if closer == ")" and allow_half and self.peek()[1] == "/":
            self.take()
            den_tok = self.take()
            if den_tok[0] != "int" or den_tok[1] != "2":
                raise ParseError("only halves are allowed as fractional p-exponents", den_tok[2])
            self.expect(")")
            return value
        if closer:
            self.expect(closer)
        return value * scale

    def signed_int(self) -> int:
        t = self.take()
        sign = 1
        if t[1] == "-":
            sign = -1
            t = self.take()
        if t[0] != "int":
            raise ParseError("expected an integer exponent", t[2])
        return sign * int(t[1])


def parse(text: str) -> LaurentPoly:
    """Parse ``text`` (e.g. ``"p^4*Y^2*Z^-2 - 3"``) into a ``LaurentPoly``."""
    return _PolyParser(text).parse()
