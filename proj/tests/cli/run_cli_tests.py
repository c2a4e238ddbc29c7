#!/usr/bin/env python3
"""Integration tests for the eulergraph CLI: exit codes, JSON envelopes,
byte determinism, and error paths. Usage:

    run_cli_tests.py <binary> <fixture_dir>
"""

import json
import os
import subprocess
import sys

BIN = sys.argv[1]
FIX = sys.argv[2]

failures = []


def run(*args, env_extra=None, expect=0):
    env = dict(os.environ)
    env.pop("EULERGRAPH_THREADS", None)
    if env_extra:
        env.update(env_extra)
    p = subprocess.run([BIN, *args], capture_output=True, text=True, env=env)
    if p.returncode != expect:
        failures.append(f"{args}: exit {p.returncode}, expected {expect}\n{p.stdout}{p.stderr}")
    return p


def run_json(*args, expect=0, env_extra=None):
    p = run(*args, expect=expect, env_extra=env_extra)
    try:
        return json.loads(p.stdout)
    except json.JSONDecodeError:
        failures.append(f"{args}: output is not JSON:\n{p.stdout}")
        return {}


def check(cond, what):
    if not cond:
        failures.append(what)


fig8 = os.path.join(FIX, "fig8.tri")
h1z = os.path.join(FIX, "closed_h1z.tri")
branched = os.path.join(FIX, "fig8_branched_outward.json")

# validate: envelope shape and content
d = run_json("validate", fig8)
check(d.get("command") == "validate", "validate: command field")
check(d.get("kind") == "ideal", "validate: fig8 is ideal")
check(d.get("exit") == 0, "validate: embedded exit code")
check(d.get("ok") is True, "validate: ok")
check("fnv1a64" in d.get("inputs", {}).get("tri", {}), "validate: input digest present")
check(d.get("threads", {}).get("effective") == 1, "validate: effective threads")

# byte determinism: identical invocations give identical bytes
a = run("validate", fig8).stdout
b = run("validate", fig8).stdout
check(a == b, "validate: byte determinism")

# human rendering is not JSON but mentions the kind
p = run("validate", fig8, "--human")
check("kind: ideal" in p.stdout, "validate --human: renders fields")

# homology: all degrees by default, one with --k
d = run_json("homology", fig8)
check(len(d.get("groups", [])) == 3, "homology: ideal fixture has degrees 0..2")
d = run_json("homology", fig8, "--k", "1")
check(d.get("groups", [{}])[0].get("rank") == 1, "homology --k 1: H1 rank")
d = run_json("homology", fig8, "--k", "3", expect=1)
check(d.get("error", {}).get("type") == "domain", "homology --k 3 on ideal: domain error")
check("no dual 3-cells" in d.get("error", {}).get("message", ""), "homology --k 3: message")

# orient enum
d = run_json("orient", "enum", fig8)
check(d.get("count") == 4, "orient enum: count")
check(d.get("complete") is True, "orient enum: complete")
check(d.get("orientations") == ["++", "+-", "-+", "--"], "orient enum: literals")
d = run_json("orient", "enum", fig8, "--count-only")
check("orientations" not in d, "orient enum --count-only: no listing")
d = run_json("orient", "enum", fig8, "--limit", "2")
check(d.get("count") == 2 and d.get("complete") is False, "orient enum --limit")

# euler dunfield on a closed fixture
d = run_json("euler", "dunfield", h1z, "--orient", "+++")
check(d.get("cochain") == [1, -1, 1], "euler dunfield: cochain")
check(d.get("cocycle_ok") is True, "euler dunfield: cocycle")
check("conditional on foliarity" in d.get("interpretation", ""), "euler dunfield: label")
d = run_json("euler", "dunfield", h1z, "--orient", "++-", expect=1)
check("not acyclic" in d.get("error", {}).get("message", ""), "euler dunfield: non-acyclic")
run("euler", "dunfield", fig8, "--orient", "++", expect=1)  # ideal: no 3-cells

# taut find / taut euler
d = run_json("taut", "find", fig8)
check(d.get("count") == 6, "taut find: count")
d = run_json("taut", "euler", fig8, "--taut", "01 23")
check(d.get("ok") is True, "taut euler: all checks pass")
check({c["name"] for c in d.get("checks", [])} >= {"cycle law", "double class relation"},
      "taut euler: check names")
run("taut", "euler", fig8, "--taut", "bogus", expect=2)
d = run_json("taut", "euler", fig8, "--taut", "01 01", expect=1)
check(d.get("taut_check", {}).get("ok") is False, "taut euler: violations reported")

# maw graph
d = run_json("maw", "graph", branched)
check(d.get("ok") is True, "maw graph: cycle law")
check(all(r["in"] == 1 and r["out"] == 1 for r in d.get("regions", [])),
      "maw graph: conservation values")

# swap
d = run_json("swap", "--k", "2", "--delta", "[1]")
check(d.get("result_is_zero") is True, "swap k=2: zero class")
d = run_json("swap", "--k", "4", "--delta", "[1]")
check(d.get("result", {}).get("free") == [-2], "swap k=4: scaled class")
d = run_json(
    "swap", "--k", "6", "--delta",
    '{"basis":"b","cohomology":false,"degree":1,"free":[],"torsion":[{"modulus":5,"residue":1}]}')
check(d.get("result", {}).get("torsion") == [{"modulus": 5, "residue": 1}],
      "swap k=6: torsion residue")
run("swap", "--k", "3", "--delta", "[1]", expect=1)  # odd k is a domain error
run("swap", "--k", "2", "--delta", "not json", expect=2)

# input errors
run("validate", os.path.join(FIX, "missing.tri"), expect=2)
run("frobnicate", expect=2)
run("validate", expect=2)  # missing positional

# thread control env var
d = run_json("validate", fig8, env_extra={"EULERGRAPH_THREADS": "7"})
check(d.get("threads") == {"requested": 7, "effective": 1}, "threads: echo")
run("validate", fig8, env_extra={"EULERGRAPH_THREADS": "x"}, expect=2)

if failures:
    print(f"{len(failures)} CLI test failure(s):")
    for f in failures:
        print("  -", f)
    sys.exit(1)
print("all CLI tests passed")
