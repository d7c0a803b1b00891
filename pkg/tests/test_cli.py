import io
import json
import os
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from gsp4hecke.cli import main
from gsp4hecke.golden import REFERENCE_DECOMPOSITIONS


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


SCHEMA = json.loads(resources.files("gsp4hecke").joinpath("schema.json").read_text())


def run_json(*argv):
    code, out, _ = run(*argv, "--format", "json")
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    assert doc["schema"] == "1"
    return code, doc


def test_transform_text():
    assert run("transform", "0", "0") == (0, "1\n", "")
    code, out, _ = run("transform", "1", "2")
    assert code == 0 and out == "p^2*Y*Z^2+p^2*Y+p^2-1+p^2*Y^-1+p^2*Y^-1*Z^-2\n"


def test_transform_bad_index_is_usage_error():
    code, out, err = run("transform", "1", "0")
    assert code == 2 and out == "" and "l >= 2m" in err
    code, doc = run_json("transform", "1", "0")
    assert code == 2 and doc["error"]["kind"] == "InvalidIndex"


def test_volume():
    assert run("volume", "0", "1") == (0, "p^3+p^2+p+1\n", "")
    code, doc = run_json("volume", "0", "1", "--p", "3")
    assert doc["volume"] == "p^3+p^2+p+1" and doc["value"] == "40"


@pytest.mark.parametrize("expr", ["T2^2", "sigma", "sigma^2"])
def test_decompose_json(expr):
    code, doc = run_json("decompose", expr)
    assert code == 0
    want = sorted(REFERENCE_DECOMPOSITIONS[expr].items(), key=lambda kv: (kv[0][1], kv[0][0]))
    got = [((t["m"], t["l"]), t["coeff"]) for t in doc["terms"]]
    assert [k for k, _ in got] == [k for k, _ in want]
    from gsp4hecke.algebra import parse

    assert all(parse(c) == parse(w) for (_, c), (_, w) in zip(got, want))


def test_decompose_identity_and_text():
    code, doc = run_json("decompose", "I")
    assert doc["terms"] == [{"m": 0, "l": 0, "coeff": "1"}]
    assert run("decompose", "T1*T2 - T2*T1") == (0, "0\n", "")


def test_decompose_parse_error():
    code, doc = run_json("decompose", "T2 +* T1")
    assert code == 2 and doc["error"]["kind"] == "ParseError"


def test_decompose_global_flag_positions():
    a = run("--format", "json", "decompose", "sigma")
    b = run("decompose", "sigma", "--format", "json")
    assert a == b


def test_hbound():
    code, doc = run_json("hbound", "sigma^2", "--p", "11")
    assert code == 0 and doc["leading_degree"] == 10 and doc["value"] == "68104202112"
    code, doc = run_json("hbound", "T2")
    assert doc["leading_degree"] is None and doc["bound"] == "0"


def test_verify_all():
    code, out, _ = run("verify", "all")
    lines = out.splitlines()
    assert code == 0
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert any("transform tau(4,8)" in line for line in lines)
    code, doc = run_json("verify", "transforms")
    assert doc["passed"] and len(doc["items"]) == 12


def test_snf_and_dictionary():
    assert run("snf", "1,0;0,9", "--p", "3") == (0, "0 2\n", "")
    assert run("snf", "1,0;0,9")[0] == 2
    assert run("snf", "1,x", "--p", "3")[0] == 2
    assert run("snf", "1,0;0,27", "--p", "3", "--k", "3")[0] == 1
    code, doc = run_json("dictionary", "3", "1", "2")
    assert code == 0 and doc["passed"] and doc["smith_valuations"] == [0, 1, 1, 2]


def test_amplify(tmp_path):
    code, doc = run_json("amplify", "--P", "1000", "--P", "2000", "--distribution", "constant:1")
    assert code == 0 and [r["P"] for r in doc["rows"]] == [1000, 2000]
    assert doc["rows"][1]["worst_ratio"] < doc["rows"][0]["worst_ratio"]
    cfg = tmp_path / "amp.cfg"
    cfg.write_text("P = 1000\ndistribution = bimodal:0,1\nseeds = 2\n")
    code, doc = run_json("amplify", "--config", str(cfg), "--seed", "5")
    assert code == 0 and doc["seeds"] == [5, 6]
    prof = tmp_path / "prof.txt"
    from gsp4hecke.bounds import good_primes

    prof.write_text("".join(f"{p} 0.0\n" for p in good_primes(1000)))
    code, doc = run_json("amplify", "--profile", str(prof))
    assert doc["rows"][0]["case"] == 2
    assert run("amplify", "--P", "100")[0] == 2
    cfg.write_text("colour = red\n")
    assert run("amplify", "--config", str(cfg))[0] == 2


def test_usage_errors():
    assert run()[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("transform", "a", "b")[0] == 2


def test_deterministic_bytes_across_processes():
    outs = set()
    for seed in ("0", "1", "12345"):
        env = dict(os.environ, PYTHONHASHSEED=seed)
        res = subprocess.run(
            [sys.executable, "-m", "gsp4hecke", "--format", "json", "decompose", "sigma^2"],
            capture_output=True,
            env=env,
            check=True,
        )
        outs.add(res.stdout)
    assert len(outs) == 1
