"""End-to-end checks of the sharpineq command line."""

import csv
import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

CLI = sys.argv[1]
SCHEMA = json.loads(Path(sys.argv[2]).read_text())
failures = []


def run(*args, expect=0):
    p = subprocess.run([CLI, *args], capture_output=True, text=True)
    if p.returncode != expect:
        failures.append(f"{' '.join(args)}: exit {p.returncode}, expected {expect}\n{p.stderr}")
    return p


def doc(*args, expect=0):
    p = run(*args, expect=expect)
    try:
        d = json.loads(p.stdout)
        jsonschema.validate(d, SCHEMA)
        return d
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        failures.append(f"{' '.join(args)}: invalid report: {e}")
        return {"records": []}


def check(cond, what):
    if not cond:
        failures.append(what)


d = doc("constants", "--k-magnetic", "0.5")
check(d["records"] and d["records"][0]["value"] == 1.0, "K(1/2) should be exactly 1")
d = doc("constants")
check(len(d["records"]) == 6, "default constants table")

d = doc("vcurve", "--family", "pzm", "--d-max", "1e4", "--grid-points", "20")
check(d["records"][0]["lambda"] == -1.0, "vcurve starts at the endpoint")
doc("vcurve", "--family", "magnetic", "--alpha", "0.3", "--grid-points", "5")
doc("vcurve", "--family", "half", "--alpha", "0.7", "--grid-points", "5")

for args in (["--scan", "w"], ["--scan", "phi", "--alpha", "0.4"], ["--scan", "r", "--alpha", "0.25"]):
    d = doc("scan", *args, "--grid-points", "2000")
    check(d["records"][0]["all_negative"], f"scan {args} negative")

with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)
    out = tmp / "scan.csv"
    run("scan", "--scan", "phi", "--alpha", "0.5", "--grid-points", "100", "--format", "csv", "--out", str(out))
    rows = list(csv.reader(out.open()))
    check(rows[0] == ["point", "value"] and len(rows) == 101, "scan csv layout")

    seq = tmp / "seq.txt"
    seq.write_text("# a_k\n1\n0.5\n0.25\n")
    d = doc("verify", "--inequality", "carlson", "--sequence", str(seq))
    check(d["records"][0]["satisfied"], "carlson on a short sequence")
    d = doc("verify", "--inequality", "landau_second")
    check(abs(d["records"][0]["margin"]) <= 1e-8 * d["records"][0]["rhs"], "built-in extremal saturates")
    d = doc("verify", "--inequality", "magnetic_corrected", "--alpha", "0.3", "--ensemble", "50", "--seed", "4")
    check(d["records"][0]["violations"] == 0, "magnetic ensemble")
    bad = tmp / "bad.txt"
    bad.write_text("1\n-1\n")
    run("verify", "--sequence", str(bad), expect=2)

    d = doc("spectrum", "--geometry", "circle", "--level", "1")
    check(len(d["records"][0]["negative_eigenvalues"]) == 2, "circle constant spectrum")
    check(abs(d["records"][1]["ratio"] - 0.6202) < 1e-3, "circle ratio")
    pot = tmp / "v.json"
    pot.write_text(json.dumps({
        "schema_version": 1, "geometry": "circle", "dimension": 1,
        "grid": {"points": [256]},
        "samples_re": [2.0] * 256, "samples_im": [0.0] * 256}))
    d = doc("spectrum", "--potential", str(pot), "--alpha", "0.3", "--gamma", "1.5")
    check(d["records"][1]["satisfied"], "spectrum from a potential file")

    figs = tmp / "figs"
    run("figures", "--fig", "3", "--grid-points", "400", "--out", str(figs))
    files = sorted(figs.glob("fig3_*.csv"))
    check(len(files) == 3, "three F(alpha, lambda) curves")
    for f in files:
        vals = [float(r["value"]) for r in csv.DictReader(f.open())]
        i = max(range(len(vals)), key=vals.__getitem__)
        interior = 0 < i < len(vals) - 1
        rising = all(a < b for a, b in zip(vals[:i], vals[1:i + 1]))
        falling = all(a > b for a, b in zip(vals[i:-1], vals[i + 1:]))
        check(interior and rising and falling, f"{f.name}: unique interior maximum")
    run("figures", "--grid-points", "50", "--out", str(figs))
    check(len(list(figs.glob("*.csv"))) == 10, "all figure files")

run("constants", "--k-magnetic", "1.0", expect=3)
run("scan", "--scan", "phi", "--alpha", "0.1", expect=3)
run("scan", "--no-such-flag", expect=2)
run("verify", "--inequality", "unknown", expect=2)
run("spectrum", "--geometry", "torus", "--gamma", "0.5", "--truncation", "8", expect=3)

if "--with-suite" in sys.argv:
    a = run("suite", "--seed", "42")
    b = run("suite", "--seed", "42")
    check(a.stdout == b.stdout and a.stdout, "suite output is deterministic")
    jsonschema.validate(json.loads(a.stdout), SCHEMA)

for f in failures:
    print("FAIL:", f)
print(f"{'ok' if not failures else 'failed'}: {len(failures)} failure(s)")
sys.exit(1 if failures else 0)
