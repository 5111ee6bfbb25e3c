#!/usr/bin/env python3
"""Smoke test of the skr command line: exit codes, JSON shape, determinism."""
import json
import subprocess
import sys

BIN = sys.argv[1]
failures = []


def run(*args):
    p = subprocess.run([BIN, *args], capture_output=True, text=True, timeout=300)
    return p.returncode, p.stdout, p.stderr


def check(name, cond, detail=""):
    print(("ok   " if cond else "FAIL ") + name + ("" if cond else f"  {detail}"))
    if not cond:
        failures.append(name)


rc, out, _ = run("character", "--m", "2", "--n", "1", "--lambda", "2,0,0")
j = json.loads(out)
check("character 2eps1 has five weights", rc == 0 and len(j["weights"]) == 5 and j["dim"] == 5, out)

rc, out, _ = run("verify-ybe", "--m", "1", "--n", "1")
check("verify-ybe (1,1) exits 0", rc == 0 and json.loads(out)["convention"] == "graded", out)

rc, out, _ = run("qcharacter", "--m", "2", "--n", "1", "--lambda", "k-rect", "r=2", "--normalize")
j = json.loads(out)
monos = sorted(t["monomial"] for t in j["terms"])
check("normalized KR q-character of gl(2,1), r = 2", rc == 0 and j["basis"] == "A" and monos == sorted([
    "1",
    "[A_{2,a*q^3}]^-1",
    "[A_{1,a*q}]^-1 [A_{2,a*q^3}]^-1",
    "[A_{1,a*q}]^-1 [A_{2,a*q}]^-1 [A_{2,a*q^3}]^-1",
]), out)

rc, out, _ = run("gt-patterns", "--m", "2", "--n", "1", "--lambda", "2,0,0")
check("five GT patterns", rc == 0 and json.loads(out)["count"] == 5, out)

rc, out, _ = run("restrict", "--module", "limit-minus")
j = json.loads(out)
check("rho^- restriction is not semisimple",
      rc == 0 and not j["semisimple"] and [s["basis"] for s in j["summands"]] == [[1], [2, 3], [4]], out)

rc, out, _ = run("kappa-audit", "--variant", "plus")
check("kappa audit passes", rc == 0 and json.loads(out)["pass"], out)

rc, out, _ = run("cyclicity-check", "--m", "2", "--n", "1", "--chain", "fundamental", "--r", "2", "--k", "2")
check("fundamental chain is cyclic", rc == 0 and json.loads(out)["cyclic"], out)

rc, out, _ = run("cyclicity-check", "--m", "2", "--n", "1", "--module", "kr:1,1@a*q^-2", "--module", "kr:1,1")
check("the reversed fundamental order is not cyclic", rc == 1 and not json.loads(out)["cyclic"], out)

rc, out, _ = run("verify-rtt", "--module", "generic:b")
check("generic limit satisfies RTT", rc == 0, out)

rc, out, _ = run("criteria", "--m", "2", "--n", "1", "--f", "(1 - z*a*q)/(1 - z*a*q^-1);1")
check("criteria rejects the wrong order", rc == 0 and not json.loads(out)["finite_dimensional"], out)

rc, _, err = run("character", "--m", "2", "--n", "1", "--lambda", "2,0")
check("short lambda is a usage error", rc == 2 and "M+N" in err, err)
rc, _, err = run("character", "--m", "2", "--n", "1", "--lambda", "2,a,0")
check("malformed lambda is a usage error", rc == 2 and "malformed" in err, err)
rc, _, _ = run("no-such-command")
check("unknown subcommand is a usage error", rc == 2)
rc, _, err = run("tensor", "--m", "2", "--n", "1", "--module", "natural", "--module", "natural", "--module", "natural",
                 "--module", "natural", "--module", "natural", "--module", "natural")
check("dimension cap is reported", rc == 2 and "SKR_DIM_CAP" in err, err)

a = run("ell-decompose", "--module", "gl21-plus:2", "--normalize", "--format", "table")
b = run("ell-decompose", "--module", "gl21-plus:2", "--normalize", "--format", "table")
check("identical invocations give identical output", a == b and a[0] == 0)

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
