"""Golden-file verification suite behind ``gsp4hecke verify``."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable

from .algebra import parse, print_canonical
from .bounds import element_h_bound
from .errors import HeckeError
from .golden import REFERENCE_DECOMPOSITIONS, REFERENCE_NORM_DEGREES, REFERENCE_TRANSFORMS
from .hecke import HeckeElement, decompose_expr, eval_expr
from .padic import verify_dictionary
from .spherical import basic_transform

DICTIONARY_PRIMES = (3, 7, 11)
DICTIONARY_MAX_L = 4
DICTIONARY_PRECISION = 6


@dataclass(frozen=True)
class SuiteItem:
    name: str
    passed: bool
    detail: str = ""


def _guard(name: str, check: Callable[[], tuple[bool, str]]) -> SuiteItem:
    try:
        ok, detail = check()
    except HeckeError as exc:
        return SuiteItem(name, False, f"{type(exc).__name__}: {exc}")
    return SuiteItem(name, ok, detail)


_TAU_KEY = re.compile(r"tau\((\d+),(\d+)\)")


def _transform_item(key: str) -> SuiteItem:
    def check():
        mt = _TAU_KEY.fullmatch(key)
        got = basic_transform(int(mt[1]), int(mt[2])) if mt else eval_expr(key)
        return got == parse(REFERENCE_TRANSFORMS[key]), f"{len(got)} terms"

    return _guard(f"transform {key}", check)


def _decomposition_item(key: str) -> SuiteItem:
    def check():
        got = decompose_expr(key)
        want = HeckeElement({idx: parse(c) for idx, c in REFERENCE_DECOMPOSITIONS[key].items()})
        return got == want, f"{len(got.terms)} terms"

    return _guard(f"decompose {key}", check)


def _bound_item(key: str) -> SuiteItem:
    def check():
        b = element_h_bound(decompose_expr(key), 3).symbolic
        want = REFERENCE_NORM_DEGREES[key]
        got = None if b.is_zero else b.leading_degree
        return got == want, f"bound {print_canonical(b.value)}"

    return _guard(f"hbound {key}", check)


def _dictionary_item(p: int, m: int, l: int) -> SuiteItem:
    def check():
        r = verify_dictionary(p, m, l, DICTIONARY_PRECISION)
        return r.passed, f"similitude v={r.similitude_valuation} smith={list(r.smith_valuations)}"

    return _guard(f"dictionary p={p} m={m} l={l}", check)


SUITES = ("transforms", "decompositions", "bounds", "dictionary")


def run_suite(which: str = "all") -> list[SuiteItem]:
    if which != "all" and which not in SUITES:
        raise ValueError(f"unknown suite {which!r}")
    items: list[SuiteItem] = []
    if which in ("all", "transforms"):
        items += [_transform_item(k) for k in REFERENCE_TRANSFORMS]
    if which in ("all", "decompositions"):
        items += [_decomposition_item(k) for k in REFERENCE_DECOMPOSITIONS]
    if which in ("all", "bounds"):
        items += [_bound_item(k) for k in REFERENCE_NORM_DEGREES]
    if which in ("all", "dictionary"):
        items += [
            _dictionary_item(p, m, l)
            for p in DICTIONARY_PRIMES
            for l in range(DICTIONARY_MAX_L + 1)
            for m in range(l // 2 + 1)
        ]
    return items
