#!/usr/bin/env python3
"""End-to-end checks of the levelbound CLI: documented examples, exit codes,
output formats, and schema validation of every JSON report."""

import json
import math
import os
import subprocess
import sys
import tempfile

import jsonschema

CLI = sys.argv[1]
SCHEMA_PATH = sys.argv[2]
# "main" runs everything except the known-divergent example, which runs
# alone under "twomax1-n10" so its failure stays visible on its own line.
GROUP = sys.argv[3] if len(sys.argv) > 3 else "main"

with open(SCHEMA_PATH) as fh:
    SCHEMA = json.load(fh)
VALIDATOR = jsonschema.Draft202012Validator(
    SCHEMA, format_checker=jsonschema.Draft202012Validator.FORMAT_CHECKER)

failures = []


def check(name, cond, detail=""):
    status = "PASS" if cond else "FAIL"
    print(f"{status} {name}" + (f": {detail}" if detail and not cond else ""))
    if not cond:
        failures.append(name)


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("LEVELBOUND_PRECISION_BITS", None)
    if env:
        full_env.update(env)
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env)


def run_json(*args, env=None):
    p = run(*args, env=env)
    if p.returncode != 0:
        raise RuntimeError(f"{args} exited {p.returncode}: {p.stderr}")
    doc = json.loads(p.stdout)
    errors = sorted(VALIDATOR.iter_errors(doc), key=lambda e: e.path)
    check(f"schema {' '.join(args[:5])}", not errors,
          "; ".join(f"{list(e.path)}: {e.message}" for e in errors[:3]))
    return doc


def series(doc, method, direction):
    for s in doc["bounds"]:
        if s["method"] == method and s["direction"] == direction:
            return s
    return None


if GROUP == "twomax1-n10":
    doc = run_json("analyze", "--function", "twomax1", "--n", "10")
    cls = doc["shortcuts"]["classification"]
    # Expected "strong"; the exact kernel gives weak_only at n = 10 with the
    # default epsilon 1/n (strong from n = 20). Reported, not forced.
    check("twomax1 n=10 shortcut classification strong", cls == "strong", f"got {cls}")
    print(f"{len(failures)} failure(s)")
    sys.exit(1 if failures else 0)

# analyze
doc = run_json("analyze", "--function", "onemax", "--n", "2")
dig = series(doc, "digraph-product", "lower")
check("onemax n=2 digraph d_2 = 4", abs(float(dig["d"][2]["decimal"]) - 4) < 1e-60)
m2 = doc["oracle"]["level_chain"]["m"][2]
check("onemax n=2 m_2 = 4", abs(float(m2["decimal"]) - 4) < 1e-60)
check("onemax n=2 full-state m_2 = 4",
      abs(float(doc["oracle"]["full_state"]["m"][2]["decimal"]) - 4) < 1e-12)
check("onemax n=2 log field", abs(dig["d"][2]["log"] - math.log(4)) < 1e-12)
check("onemax n=2 no sandwich violations", doc["sandwich_violations"] == [])
check("onemax n=2 manifest", doc["manifest"]["command"] == "analyze"
      and doc["manifest"]["params"]["n"] == 2 and doc["manifest"]["precision_bits"] >= 256)

doc = run_json("analyze", "--function", "onemax", "--n", "200", "--methods", "ratio-lower")
s = series(doc, "ratio-lower", "lower")
check("onemax n=200 ratio-lower coefficient minimum >= 0.4",
      s["coefficient_min"]["float"] >= 0.4, str(s["coefficient_min"]["float"]))
check("onemax n=200 full-state oracle null beyond guard", doc["oracle"]["full_state"] is None)
check("onemax n=200 level oracle present", doc["oracle"]["level_chain"] is not None)

doc = run_json("analyze", "--function", "twomax1", "--n", "20")
check("twomax1 n=20 shortcut classification strong", doc["shortcuts"]["classification"] == "strong")

doc = run_json("analyze", "--function", "deceptive", "--n", "12", "--subdigraph", "preset",
               "--methods", "digraph-product,paper-analytic", "--start", "6")
check("deceptive preset is a level partition", doc["partition"]["kind"] == "level_partition")
check("deceptive preset reorder warning", len(doc["subdigraph"]["warnings"]) > 0)
check("sub-digraph oracle below the full chain",
      all(row["holds"] for row in doc["oracle"]["subdigraph_vs_full"]))
check("paper-analytic section present", doc["paper_analytic"] is not None
      and doc["paper_analytic"]["upper"] is None)

env_doc = run_json("analyze", "--function", "onemax", "--n", "4", "--methods", "type0",
                   env={"LEVELBOUND_PRECISION_BITS": "128"})
check("precision env override", env_doc["manifest"]["precision_bits"] < 256)
flag_doc = run_json("analyze", "--function", "onemax", "--n", "4", "--methods", "type0",
                    "--precision", "512", env={"LEVELBOUND_PRECISION_BITS": "128"})
check("precision flag beats env", flag_doc["manifest"]["precision_bits"] >= 512)

# coefficients
p = run("coefficients", "--function", "onemax", "--n", "200", "--method", "ratio-lower", "--k", "200")
lines = p.stdout.split("\n")
check("coefficients exit 0", p.returncode == 0)
check("coefficients LF only", "\r" not in p.stdout)
check("coefficients header", lines[0] == "k,ell,method,value,log_value")
rows = [l.split(",") for l in lines[1:] if l]
check("onemax n=200 ratio-lower 199 rows", len(rows) == 199)
check("value at ell=199 exceeds ell=198", float(rows[198][3]) > float(rows[197][3]))
digits = rows[0][3].replace("-", "").replace(".", "").split("e")[0].lstrip("0")
check("17 significant digits", len(digits) == 17, rows[0][3])

p = run("coefficients", "--function", "onemax", "--n", "6", "--method", "type0", "--k", "1")
check("k=1 header only", p.returncode == 0 and p.stdout == "k,ell,method,value,log_value\n")

p = run("coefficients", "--function", "onemax", "--n", "2", "--method", "digraph-product")
row = p.stdout.strip().split("\n")[1].split(",")
check("onemax n=2 digraph-product row", row[:3] == ["2", "1", "digraph-product"]
      and abs(float(row[3]) - 2 / 3) < 1e-15 and abs(float(row[4]) - math.log(2 / 3)) < 1e-15)

p = run("coefficients", "--function", "onemax", "--n", "5", "--method", "nonsense")
check("unknown method exit 2", p.returncode == 2)

with tempfile.TemporaryDirectory() as tmp:
    path = os.path.join(tmp, "c.csv")
    p = run("coefficients", "--function", "fullydeceptive", "--n", "8", "--method", "viscosity",
            "--csv", path)
    with open(path) as fh:
        written = fh.read()
    check("csv written to file", p.returncode == 0 and written.startswith("k,ell,")
          and len(written.strip().split("\n")) == 8)
    check("no temp file left", os.listdir(tmp) == ["c.csv"])

# digraph
p = run("digraph", "--function", "fullydeceptive", "--n", "10", "--annotate-shortcuts")
check("fullydeceptive n=10 red arc S_10 -> S_0",
      any(l.strip().startswith("L10 -> L0") and "color=red" in l for l in p.stdout.split("\n")))
p = run("digraph", "--function", "onemax", "--n", "3")
nodes = [l for l in p.stdout.split("\n") if "[label=\"S_" in l]
arcs = [l for l in p.stdout.split("\n") if "->" in l]
check("onemax n=3 four nodes six arcs", len(nodes) == 4 and len(arcs) == 6,
      f"{len(nodes)} nodes {len(arcs)} arcs")
check("arc labels in 3-digit scientific", all("e-" in a.split("label=\"")[1][:9] for a in arcs))
p = run("digraph", "--function", "twomax1", "--n", "10", "--subdigraph", "preset")
nodes = [l for l in p.stdout.split("\n") if "[label=\"S'_" in l]
check("twomax1 n=10 preset seven nodes", len(nodes) == 7, str(len(nodes)))
p = run("digraph", "--function", "onemax", "--n", "10", "--subdigraph", "preset")
check("onemax has no preset, exit 2", p.returncode == 2)

# oracle
doc = run_json("oracle", "--function", "deceptive", "--n", "8", "--mode", "both")
check("deceptive n=8 level vs full gap <= 1e-12",
      doc["max_relative_gap"]["float"] <= 1e-12, str(doc["max_relative_gap"]["float"]))
doc = run_json("oracle", "--function", "onemax", "--n", "6", "--mode", "both", "--exact")
check("exact oracle carries fractions", "fraction" in doc["level_chain"]["m"][6]
      and doc["max_relative_gap"]["float"] == 0)
p = run("oracle", "--function", "onemax", "--n", "25", "--mode", "full")
check("full-state guard exit 3", p.returncode == 3)
p = run("oracle", "--function", "onemax", "--n", "14", "--mode", "full", "--exact")
check("exact full-state guard exit 3", p.returncode == 3)
p = run("oracle", "--function", "onemax", "--n", "6", "--mode", "sideways")
check("bad mode exit 2", p.returncode == 2)

# simulate
doc = run_json("simulate", "--function", "onemax", "--n", "10", "--start", "0", "--trials", "20")
check("simulate from level 0 mean 0", doc["mean"] == 0)
a = run_json("simulate", "--function", "twomax1", "--n", "12", "--trials", "50", "--seed", "99")
b = run_json("simulate", "--function", "twomax1", "--n", "12", "--trials", "50", "--seed", "99")
check("simulate deterministic per seed", a["hitting_times"] == b["hitting_times"]
      and a["manifest"]["seed"] == 99)
p = run("simulate", "--function", "onemax", "--n", "10", "--trials", "0")
check("zero trials exit 2", p.returncode == 2)

# verify-appendix
doc = run_json("verify-appendix", "--C", "5.44", "--n-list", "10,100,1000")
check("verify-appendix C=5.44 all pass", doc["all_pass"] and len(doc["rows"]) == 3)

# usage
check("unknown function exit 2", run("analyze", "--function", "leadingones", "--n", "5").returncode == 2)
check("missing --n exit 2", run("analyze", "--function", "onemax").returncode == 2)
check("no subcommand exit 2", run().returncode == 2)

print(f"{len(failures)} failure(s)" + (": " + ", ".join(failures) if failures else ""))
sys.exit(1 if failures else 0)
