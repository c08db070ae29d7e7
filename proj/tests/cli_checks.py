"""Smoke checks for the cg-obstruct command line: exit codes, output formats, schema."""

import json
import subprocess
import sys

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)

failures = []


def run(*args):
    return subprocess.run([cli, *args], capture_output=True, text=True)


def expect(cond, what):
    if not cond:
        failures.append(what)


for args, code in [
    (["verify", "--family", "83,103,17,11,13", "--format", "json"], 0),
    (["verify", "--knot", "T(2,5;2,7) # -T(2,5;2,7)", "--format", "json"], 1),
    (["verify", "--knot", "T(2,3;2,13) # -T(2,5;2,13) # T(2,7;2,13) # -T(2,9;2,13)", "--format", "json"], None),
]:
    r = run(*args)
    if code is not None:
        expect(r.returncode == code, f"{args}: exit {r.returncode}, expected {code}")
    try:
        jsonschema.validate(json.loads(r.stdout), schema)
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        failures.append(f"{args}: {e}")

expect(run("verify", "--family", "83,103,17,11,12").returncode == 2, "non-prime family parameter")
expect(run("verify", "--family", "83,103,17,11").returncode == 2, "short family")
expect(run("verify", "--knot", "T(2,4;2,7)").returncode == 2, "even companion")
expect(run("verify").returncode == 2, "missing knot")
expect(run("bogus").returncode == 2, "unknown subcommand")

r = run("signature", "--q", "3", "--m", "6")
lines = r.stdout.strip().splitlines()
expect(r.returncode == 0 and lines[0] == "q,a,m,sigma,eta", "signature CSV header")
expect("3,1,6,-1,1" in lines, "trefoil at the sixth root of unity")
expect("3,3,6,-2,0" in lines, "trefoil at -1")

r = run("cg", "--family", "83,103,17,11,13", "--character", "0,0,1,0,0,0,0,0", "--format", "json")
out = json.loads(r.stdout)
expect(out["sigma"] == "-6725/83" and out["eta"] == 0, f"cg output {out}")
expect(run("cg", "--family", "83,103,17,11,13", "--character", "1,2").returncode == 2, "short character")

r = run("search", "--p-min", "83", "--p-max", "103", "--q-min", "11", "--q-max", "17", "--limit", "2")
rows = [json.loads(line) for line in r.stdout.splitlines()]
expect(r.returncode == 0 and [row["rank"] for row in rows] == [1, 2], "search ranks")
expect(all(row["ranking_key"] == "product" for row in rows), "search ranking key")
for row in rows:
    try:
        jsonschema.validate(row["report"], schema)
    except jsonschema.ValidationError as e:
        failures.append(f"search report: {e.message}")

for f in failures:
    print("FAIL:", f)
print("cli checks:", "ok" if not failures else f"{len(failures)} failed")
sys.exit(1 if failures else 0)
