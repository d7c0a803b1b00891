"""Command-line interface.

Exit codes: 0 success, 1 domain error, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import configparser
import json
import math
import sys
from pathlib import Path
from typing import Any, Sequence

from .algebra import print_canonical
from .amplifier import DEFAULT_CAP, EigenvalueProfile, ProfileFamily, build_amplifier, ratio_sweep
from .bounds import element_h_bound
from .errors import HeckeError, InvalidIndex, UsageError
from .hecke import decompose, eval_expr
from .padic import smith_normal_form, verify_dictionary
from .spherical import basic_transform, volume
from .suite import SUITES, run_suite

SCHEMA_VERSION = "1"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common() -> argparse.ArgumentParser:
    # SUPPRESS lets the flags appear before or after the subcommand
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--format", choices=("text", "json"))
    common.add_argument("--p", type=int, help="prime for numeric evaluation")
    common.add_argument("--seed", type=int)
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="gsp4hecke", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text):
        return sub.add_parser(name, help=help_text, parents=[common])

    c = add("transform", "spherical transform of tau(m,l)")
    c.add_argument("m", type=int)
    c.add_argument("l", type=int)

    c = add("decompose", "expand a Hecke expression in the basic operators")
    c.add_argument("expr")
    c.add_argument("--method", choices=("greedy", "linear"), default="greedy")

    c = add("volume", "number of single cosets in the double coset of T(0,m,l)")
    c.add_argument("m", type=int)
    c.add_argument("l", type=int)

    c = add("hbound", "bound on the norm restricted to H")
    c.add_argument("expr")

    c = add("amplify", "simulate the amplifier over a prime window")
    c.add_argument("--config", type=Path, help="key=value file with defaults")
    c.add_argument("--P", dest="P", type=int, action="append", help="window start (repeat for a sweep)")
    c.add_argument("--distribution")
    c.add_argument("--profile", type=Path, help="file of '<prime> <lambda>' lines")
    c.add_argument("--seeds", type=int, help="number of profiles drawn per P")
    c.add_argument("--cap", type=float)

    c = add("verify", "run the golden suite")
    c.add_argument("suite", nargs="?", default="all", choices=("all",) + SUITES)

    c = add("snf", "Smith valuations of an integer matrix over Z_p")
    c.add_argument("matrix", help="rows separated by ';', entries by ','")
    c.add_argument("--k", type=int, default=6)

    c = add("dictionary", "check the quaternionic-symplectic dictionary for tau(m,l)")
    c.add_argument("prime", type=int)
    c.add_argument("m", type=int)
    c.add_argument("l", type=int)
    c.add_argument("--k", type=int, default=6)
    return parser


# -- commands ------------------------------------------------------------------
# each returns (payload, text lines, exit code)


def _evaluated(poly, p):
    return None if p is None else str(poly.evaluate_p(p))


def cmd_transform(a):
    poly = basic_transform(a.m, a.l)
    s = print_canonical(poly)
    return {"m": a.m, "l": a.l, "polynomial": s}, [s], 0


def cmd_volume(a):
    if not a.l >= 2 * a.m >= 0:
        raise InvalidIndex(f"index ({a.m},{a.l}) needs l >= 2m >= 0")
    poly = volume((0, a.m, a.l))
    s = print_canonical(poly)
    payload = {"m": a.m, "l": a.l, "volume": s}
    lines = [s]
    if a.p is not None:
        payload["value"] = _evaluated(poly, a.p)
        lines.append(f"value at p={a.p}: {payload['value']}")
    return payload, lines, 0


def cmd_decompose(a):
    h = decompose(eval_expr(a.expr), method=a.method)
    terms = []
    for (m, l), c in h.sorted_items():
        t = {"m": m, "l": l, "coeff": print_canonical(c)}
        if a.p is not None:
            t["value"] = _evaluated(c, a.p)
        terms.append(t)
    lines = [f"tau({t['m']},{t['l']}): {t['coeff']}" + (f"  [{t['value']}]" if "value" in t else "") for t in terms]
    return {"expr": a.expr, "terms": terms}, lines or ["0"], 0


def cmd_hbound(a):
    h = decompose(eval_expr(a.expr))
    b = element_h_bound(h, a.p if a.p is not None else 3)
    sym = b.symbolic
    degree = None if sym.is_zero else int(sym.leading_degree)
    payload = {"expr": a.expr, "bound": print_canonical(sym.value), "leading_degree": degree}
    lines = [f"bound: {payload['bound']}", f"leading degree: {'zero bound' if degree is None else degree}"]
    if a.p is not None:
        payload["p"] = a.p
        payload["value"] = str(b.numeric)
        lines.append(f"value at p={a.p}: {b.numeric}")
    return payload, lines, 0


def _amplify_settings(a) -> dict[str, Any]:
    cfg: dict[str, Any] = {"P": [1000], "distribution": "constant:0", "seeds": 1, "cap": DEFAULT_CAP, "profile": None}
    if a.config is not None:
        parser = configparser.ConfigParser()
        try:
            parser.read_string("[amplify]\n" + a.config.read_text())
        except (OSError, configparser.Error) as exc:
            raise UsageError(f"cannot read config {a.config}: {exc}") from exc
        for key, value in parser["amplify"].items():
            try:
                if key == "p":
                    cfg["P"] = [int(x) for x in value.replace(",", " ").split()]
                elif key in ("seeds", "seed"):
                    cfg[key] = int(value)
                elif key == "cap":
                    cfg["cap"] = float(value)
                elif key in ("distribution", "profile"):
                    cfg[key] = value
                else:
                    raise UsageError(f"unknown config key {key!r}")
            except ValueError as exc:
                raise UsageError(f"bad value for {key}: {value!r}") from exc
    for key in ("P", "distribution", "seeds", "cap", "profile"):
        if getattr(a, key, None) is not None:
            cfg[key] = getattr(a, key)
    if a.seed is not None:
        cfg["seed"] = a.seed
    return cfg


def cmd_amplify(a):
    cfg = _amplify_settings(a)
    Ps = sorted(cfg["P"])
    if cfg["profile"]:
        profile = EigenvalueProfile.from_file(cfg["profile"], cfg["cap"])
        rows = []
        for P in Ps:
            r = build_amplifier(profile, P)
            rows.append({"P": P, "case": r.case_taken, "operator": r.operator, "primes": len(r.primes),
                         "selected": len(r.selected), "L_value": r.L_value, "norm_bound": str(r.norm_bound),
                         "ratio": r.ratio, "reference": math.log(P) / P})
        lines = [f"P={x['P']} case={x['case']} op={x['operator']} primes={x['primes']} selected={x['selected']} "
                 f"ratio={x['ratio']:.6e} logP/P={x['reference']:.6e}" for x in rows]
        return {"source": str(cfg["profile"]), "rows": rows}, lines, 0
    base = cfg.get("seed", 0)
    family = ProfileFamily(cfg["distribution"], tuple(range(base, base + cfg["seeds"])), cfg["cap"])
    rows = [
        {"P": r.P, "cases": list(r.cases), "worst_ratio": r.worst_ratio, "reference": r.reference,
         "constant": r.empirical_constant}
        for r in ratio_sweep(family, Ps)
    ]
    lines = [f"P={x['P']} cases={x['cases']} worst_ratio={x['worst_ratio']:.6e} logP/P={x['reference']:.6e} "
             f"C={x['constant']:.4f}" for x in rows]
    return {"source": family.distribution, "seeds": list(family.seeds), "rows": rows}, lines, 0


def cmd_verify(a):
    items = run_suite(a.suite)
    ok = all(i.passed for i in items)
    payload = {"suite": a.suite, "passed": ok,
               "items": [{"name": i.name, "passed": i.passed, "detail": i.detail} for i in items]}
    lines = [f"{'PASS' if i.passed else 'FAIL'} {i.name}" + (f" ({i.detail})" if i.detail else "") for i in items]
    lines.append(f"{sum(i.passed for i in items)}/{len(items)} passed")
    return payload, lines, 0 if ok else 1


def _parse_matrix(text: str) -> list[list[int]]:
    try:
        rows = [[int(x) for x in row.split(",")] for row in text.split(";")]
    except ValueError as exc:
        raise UsageError(f"bad matrix {text!r}") from exc
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise UsageError("matrix rows must have equal length")
    return rows


def _require_p(a) -> int:
    if a.p is None:
        raise UsageError("--p is required")
    if a.p < 3 or a.p % 2 == 0 or any(a.p % d == 0 for d in range(3, math.isqrt(a.p) + 1, 2)):
        raise UsageError(f"--p {a.p} is not an odd prime")
    return a.p


def cmd_snf(a):
    p = _require_p(a)
    vals = smith_normal_form(_parse_matrix(a.matrix), p, a.k)
    return {"p": p, "k": a.k, "valuations": list(vals)}, [" ".join(map(str, vals))], 0


def cmd_dictionary(a):
    r = verify_dictionary(a.prime, a.m, a.l, a.k)
    payload = {"p": r.p, "m": r.m, "l": r.l, "k": r.k, "alpha_hat": list(r.alpha_hat),
               "similitude_valuation": r.similitude_valuation, "smith_valuations": list(r.smith_valuations),
               "expected_valuations": list(r.expected_valuations), "passed": r.passed}
    lines = [
        f"alpha_hat = {r.alpha_hat}",
        f"similitude valuation = {r.similitude_valuation} (expected {r.l})",
        f"smith valuations = {list(r.smith_valuations)} (expected {list(r.expected_valuations)})",
        "PASS" if r.passed else "FAIL",
    ]
    return payload, lines, 0 if r.passed else 1


COMMANDS = {
    "transform": cmd_transform,
    "decompose": cmd_decompose,
    "volume": cmd_volume,
    "hbound": cmd_hbound,
    "amplify": cmd_amplify,
    "verify": cmd_verify,
    "snf": cmd_snf,
    "dictionary": cmd_dictionary,
}


def _emit(fmt: str, command: str, payload=None, lines=(), error=None, out=sys.stdout, err=sys.stderr):
    if fmt == "json":
        doc = {"schema": SCHEMA_VERSION, "command": command}
        doc.update({"error": error} if error is not None else payload)
        out.write(json.dumps(doc, ensure_ascii=True) + "\n")
    elif error is not None:
        err.write(f"error: {error['message']}\n")
    else:
        out.write("".join(line + "\n" for line in lines))


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    fmt = "json" if "--format=json" in argv or _flag_value(argv, "--format") == "json" else "text"
    command = next((x for x in argv if x in COMMANDS), None)
    try:
        a = parser.parse_args(argv)
        for key in ("format", "p", "seed"):
            if not hasattr(a, key):
                setattr(a, key, "text" if key == "format" else None)
        payload, lines, code = COMMANDS[a.command](a)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except UsageError as exc:
        _emit(fmt, command, error={"kind": type(exc).__name__, "message": str(exc)}, out=out, err=err)
        return 2
    except HeckeError as exc:
        _emit(fmt, command, error={"kind": type(exc).__name__, "message": str(exc)}, out=out, err=err)
        return 1
    _emit(fmt, a.command, payload, lines, out=out, err=err)
    return code


def _flag_value(argv: list[str], flag: str) -> str | None:
    for i, x in enumerate(argv[:-1]):
        if x == flag:
            return argv[i + 1]
    return None


if __name__ == "__main__":
    sys.exit(main())
