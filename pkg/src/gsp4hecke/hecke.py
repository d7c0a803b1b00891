"""Spherical Hecke algebra elements in the basis of basic double cosets.

Products are computed on spherical transforms (where convolution is plain
multiplication) and mapped back with ``decompose``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Union

from .algebra import ONE, ZERO, LaurentPoly, P, parse, print_canonical, print_key
from .errors import InvalidIndex, NonIntegralCoefficient, NotInSpan, ParseError
from .linsolve import solve_linear
from .rootdatum import TorusExponent, positive_representative, weyl_group, weyl_monomial_action
from .spherical import basic_transform

Index = tuple[int, int]


def _valid_index(m: int, l: int) -> bool:
    return l >= 2 * m >= 0


class HeckeElement:
    """Finite combination ``sum c(m, l) * tau(m, l)`` with ``c`` polynomials in ``p``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Index, Union[LaurentPoly, int, str]] | None = None):
        clean: dict[Index, LaurentPoly] = {}
        for (m, l), c in (terms or {}).items():
            if not _valid_index(m, l):
                raise InvalidIndex(f"basic operator index ({m},{l}) needs l >= 2m >= 0")
            if isinstance(c, str):
                c = parse(c)
            elif isinstance(c, int):
                c = LaurentPoly.const(c)
            if not c.is_p_only():
                raise ValueError(f"coefficient of tau({m},{l}) involves Y or Z")
            if c:
                clean[(m, l)] = c
        self._terms = clean

    @classmethod
    def basic(cls, m: int, l: int) -> "HeckeElement":
        return cls({(m, l): ONE})

    @classmethod
    def identity(cls) -> "HeckeElement":
        return cls.basic(0, 0)

    @property
    def terms(self) -> Mapping[Index, LaurentPoly]:
        return self._terms

    def sorted_items(self) -> list[tuple[Index, LaurentPoly]]:
        """Ordered by ``(l, m)``."""
        return sorted(self._terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def coefficient(self, m: int, l: int) -> LaurentPoly:
        return self._terms.get((m, l), ZERO)

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, ZERO) + c
        return HeckeElement(out)

    def __neg__(self) -> "HeckeElement":
        return HeckeElement({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def scale(self, c: Union[LaurentPoly, int]) -> "HeckeElement":
        return HeckeElement({k: v * c for k, v in self._terms.items()})

    def __mul__(self, other: "HeckeElement") -> "HeckeElement":
        return multiply_basis(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({print_canonical(c)})*tau({m},{l})" for (m, l), c in self.sorted_items())

    def __repr__(self) -> str:
        return f"HeckeElement({self})"


def to_satake(h: HeckeElement) -> LaurentPoly:
    total = ZERO
    for (m, l), c in h.terms.items():
        total = total + c * basic_transform(m, l)
    return total


# -- expressions ---------------------------------------------------------------


@dataclass(frozen=True)
class Atom:
    name: str  # "tau", "p" or "int"
    m: int = 0
    l: int = 0
    value: int = 0


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class Power:
    base: "Expr"
    exponent: int


Expr = Union[Atom, BinOp, Neg, Power]

_NAMED = {"I": (0, 0), "T1": (0, 1), "T2": (1, 2)}

_EXPR_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<tau>tau)|(?P<name>sigma|T1|T2|I)|(?P<p>p)|(?P<int>\d+)|(?P<op>[-+*^(),])"
)


def _tokens(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        mt = _EXPR_TOKEN.match(text, pos)
        if not mt:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if mt.lastgroup != "ws":
            out.append((mt.lastgroup, mt.group(), pos))
        pos = mt.end()
    out.append(("end", "", len(text)))
    return out


class _ExprParser:
    def __init__(self, text: str):
        self.toks = _tokens(text)
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

    def parse(self) -> Expr:
        e = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise ParseError(f"unexpected token {t[1]!r}", t[2])
        return e

    def expr(self) -> Expr:
        t = self.peek()
        if t[1] == "-":
            self.take()
            left: Expr = Neg(self.term())
        else:
            if t[1] == "+":
                self.take()
            left = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            left = BinOp(op, left, self.term())
        return left

    def term(self) -> Expr:
        left = self.factor()
        while self.peek()[1] == "*":
            self.take()
            left = BinOp("*", left, self.factor())
        return left

    def factor(self) -> Expr:
        base = self.primary()
        if self.peek()[1] == "^":
            self.take()
            t = self.take()
            if t[0] != "int":
                raise ParseError("exponent must be a nonnegative integer", t[2])
            base = Power(base, int(t[1]))
        return base

    def primary(self) -> Expr:
        t = self.take()
        kind, text, pos = t
        if kind == "name":
            if text == "sigma":
                return _sigma_expr()
            m, l = _NAMED[text]
            return Atom("tau", m, l)
        if kind == "tau":
            self.expect("(")
            m = self.signed()
            self.expect(",")
            l = self.signed()
            self.expect(")")
            if not _valid_index(m, l):
                raise InvalidIndex(f"tau({m},{l}) needs l >= 2m >= 0")
            return Atom("tau", m, l)
        if kind == "p":
            return Atom("p")
        if kind == "int":
            return Atom("int", value=int(text))
        if text == "(":
            e = self.expr()
            self.expect(")")
            return e
        raise ParseError(f"unexpected token {text or 'end of input'!r}", pos)

    def signed(self) -> int:
        t = self.take()
        sign = 1
        if t[1] == "-":
            sign, t = -1, self.take()
        if t[0] != "int":
            raise ParseError("expected an integer", t[2])
        return sign * int(t[1])


def _sigma_expr() -> Expr:
    # T2^2 - (p+1) * T1^2
    t1, t2 = Atom("tau", 0, 1), Atom("tau", 1, 2)
    return BinOp("-", Power(t2, 2), BinOp("*", BinOp("+", Atom("p"), Atom("int", value=1)), Power(t1, 2)))


def parse_expr(text: str) -> Expr:
    """Parse the Hecke expression grammar (``T1``, ``T2``, ``sigma``, ``tau(m,l)``, ``I``)."""
    return _ExprParser(text).parse()


def eval_expr(e: Union[Expr, str]) -> LaurentPoly:
    """Spherical transform of an expression."""
    if isinstance(e, str):
        e = parse_expr(e)
    if isinstance(e, Atom):
        if e.name == "tau":
            return basic_transform(e.m, e.l)
        if e.name == "p":
            return P
        return LaurentPoly.const(e.value)
    if isinstance(e, Neg):
        return -eval_expr(e.arg)
    if isinstance(e, Power):
        return eval_expr(e.base) ** e.exponent
    a, b = eval_expr(e.left), eval_expr(e.right)
    if e.op == "+":
        return a + b
    if e.op == "-":
        return a - b
    return a * b


# -- decomposition -------------------------------------------------------------


def _char_key(ch: tuple[int, int]) -> tuple[int, int]:
    return print_key((0, ch[0], ch[1]))[:2]


def orbit_index(ch: tuple[int, int]) -> Index:
    """Basic-operator index whose double coset contains the character ``ch``."""
    t = positive_representative(TorusExponent(0, ch[0], ch[1]))
    return (t.m, t.l)


def leading_character(m: int, l: int) -> tuple[int, int]:
    chars = basic_transform(m, l).by_character()
    return max(chars, key=_char_key)


def is_weyl_invariant(f: LaurentPoly) -> bool:
    for w in weyl_group():
        g = f.map_monomials(lambda mono: (mono[0], *weyl_monomial_action(w, (mono[1], mono[2]))))
        if g != f:
            return False
    return True


def _check_coefficient(idx: Index, c: LaurentPoly) -> None:
    if any(m[0] < 0 or m[0] % 2 for m in c.terms):
        raise NonIntegralCoefficient(f"coefficient of tau{idx} is {c}, not a polynomial in p")


def decompose(s: LaurentPoly, method: str = "greedy") -> HeckeElement:
    """Write a Weyl-invariant transform as a combination of basic transforms.

    ``method="greedy"`` strips the largest character of the residual with
    the one basic transform whose leading character it is; when the
    leading coefficient does not divide, the exact linear solve
    (``method="linear"``) takes over.
    """
    if method == "linear":
        return _decompose_linear(s)
    if method != "greedy":
        raise ValueError(f"unknown method {method!r}")
    residual = s
    out: dict[Index, LaurentPoly] = {}
    while residual:
        chars = residual.by_character()
        lead = max(chars, key=_char_key)
        idx = orbit_index(lead)
        if leading_character(*idx) != lead:
            raise NotInSpan(f"character Y^{lead[0]}*Z^{lead[1]} is not a leading character; input not Weyl-invariant")
        basis = basic_transform(*idx)
        lc = basis.by_character()[lead]
        if not lc.is_monomial():
            return _decompose_linear(s)
        ((mono, c),) = lc.items()
        coeff_terms = {}
        for m, v in chars[lead].items():
            q, r = divmod(v, c)
            if r:
                return _decompose_linear(s)
            coeff_terms[(m[0] - mono[0], 0, 0)] = q
        coeff = LaurentPoly(coeff_terms)
        _check_coefficient(idx, coeff)
        out[idx] = out.get(idx, ZERO) + coeff
        residual = residual - coeff * basis
    return HeckeElement(out)


def _orbit_rep(ch: tuple[int, int]) -> tuple[int, int]:
    return max((weyl_monomial_action(w, ch) for w in weyl_group()), key=_char_key)


def _decompose_linear(s: LaurentPoly, l_max: int | None = None) -> HeckeElement:
    if not is_weyl_invariant(s):
        raise NotInSpan("input is not Weyl-invariant")
    if s.is_zero():
        return HeckeElement()
    chars = s.by_character()
    if l_max is None:
        l_max = max(orbit_index(ch)[1] for ch in chars)
    candidates = [(m, l) for l in range(l_max + 1) for m in range(l // 2 + 1)]
    # a Weyl-invariant polynomial is fixed by its coefficients on one
    # character per orbit, so only orbit representatives give equations
    transforms = {idx: basic_transform(*idx).by_character() for idx in candidates}
    reps: list[tuple[int, int]] = []
    for table in [chars, *transforms.values()]:
        for ch in table:
            r = _orbit_rep(ch)
            if r == ch and r not in reps:
                reps.append(r)
    system = [[transforms[idx].get(r, ZERO) for idx in candidates] for r in reps]
    rhs = [chars.get(r, ZERO) for r in reps]
    try:
        sol = solve_linear(system, rhs)
    except Exception as exc:
        raise NotInSpan(f"no combination of basics with l <= {l_max}: {exc}") from exc
    out = {}
    for idx, x in zip(candidates, sol):
        try:
            c = x.reduce()
        except ArithmeticError as exc:
            raise NonIntegralCoefficient(f"coefficient of tau{idx} is a proper fraction") from exc
        _check_coefficient(idx, c)
        out[idx] = c
    h = HeckeElement(out)
    if to_satake(h) != s:
        raise NotInSpan("residual nonzero after linear solve")
    return h


def multiply_basis(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    return decompose(to_satake(a) * to_satake(b))


def decompose_expr(text: str, method: str = "greedy") -> HeckeElement:
    return decompose(eval_expr(text), method=method)


def sum_elements(items: Iterable[HeckeElement]) -> HeckeElement:
    total = HeckeElement()
    for h in items:
        total = total + h
    return total
