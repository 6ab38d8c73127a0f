"""End-to-end checks of the quillen-lab command line.

Usage: test_cli.py <quillen-lab binary> <schemas dir>
"""
import json
import os
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

BIN = sys.argv[1]
SCHEMAS = Path(sys.argv[2])
failures = []


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def run(*args, env=None):
    e = dict(os.environ)
    if env:
        e.update(env)
    p = subprocess.run([BIN, *args], capture_output=True, text=True, env=e,
                       timeout=600)
    return p.returncode, p.stdout, p.stderr


def check(name, cond, detail=""):
    print(("ok   " if cond else "FAIL ") + name)
    if not cond:
        failures.append(name)
        if detail:
            print("     " + detail[:2000])


def expect_json(name, args, code, kind, env=None):
    rc, out, err = run("--json", *args, env=env)
    check(f"{name}: exit {code}", rc == code, f"rc={rc} stderr={err}")
    try:
        doc = json.loads(out)
    except json.JSONDecodeError as exc:
        check(f"{name}: JSON output", False, f"{exc}: {out[:500]} {err}")
        return None
    try:
        jsonschema.validate(doc, schema(kind))
        check(f"{name}: matches {kind} schema", True)
    except jsonschema.ValidationError as exc:
        check(f"{name}: matches {kind} schema", False, exc.message)
    return doc


tmp = Path(tempfile.mkdtemp())

# constructions, verification and certificates
constructed = {
    "sym10_5": ["construct", "sym-alt", "--n", "10", "--p", "5"],
    "alt5_5": ["construct", "sym-alt", "--n", "5", "--p", "5", "--alternating"],
    "a8": ["construct", "a8"],
    "s8": ["construct", "a8", "--symmetric"],
    "sl42": ["construct", "sl42"],
    "sl62": ["construct", "sl62"],
    "lin423": ["construct", "linear", "--n", "4", "--q", "2", "--p", "3"],
    "lin273": ["construct", "linear", "--n", "2", "--q", "7", "--p", "3"],
    "lin443": ["construct", "linear", "--n", "4", "--q", "4", "--p", "3"],
    "pgl273": ["construct", "projective", "--n", "2", "--q", "7", "--p", "3",
               "--kind", "PGL"],
    "psl273": ["construct", "projective", "--n", "2", "--q", "7", "--p", "3"],
}
for name, args in constructed.items():
    doc = expect_json(f"construct {name}", args, 0, "collection")
    if doc is None:
        continue
    path = tmp / f"{name}.json"
    path.write_text(json.dumps(doc))
    rep = expect_json(f"verify {name}", ["verify", str(path)], 0,
                      "admissibility")
    check(f"verify {name}: admissible", rep is not None and rep["admissible"])
    cert = expect_json(f"certify {name}", ["certify", str(path)], 0,
                       "certificate")
    check(f"certify {name}: granted", cert is not None and cert["granted"])

a8 = json.loads((tmp / "a8.json").read_text())
cert = expect_json("cycle certify a8", ["cycle", "certify", str(tmp / "a8.json")],
                   0, "certificate")
check("a8: independent check passed",
      cert is not None and cert["independent_homology_check"] == "passed"
      and cert["D_all_zero"] and cert["betti_top"] >= 1)
expect_json("collection verify a8",
            ["collection", "verify", str(tmp / "a8.json")], 0, "admissibility")
sym10 = json.loads((tmp / "sym10_5.json").read_text())
check("sym10_5: asserted maximality", sym10["maximality"] == "asserted")
check("sym10_5: explicit elements",
      sym10["basis"][0]["perm"] == [2, 3, 4, 5, 1, 6, 7, 8, 9, 10]
      and sym10["c"][1]["perm"] == [1, 2, 3, 4, 5, 7, 8, 6, 9, 10])

# a broken collection is refuted, through a file and through stdin
broken = dict(a8)
broken["c"] = ["()", a8["c"][1]]
bpath = tmp / "broken.json"
bpath.write_text(json.dumps(broken))
rep = expect_json("verify broken", ["verify", str(bpath)], 1, "admissibility")
check("verify broken: condition (c) reported",
      rep is not None and any(f["condition"] == "c" for f in rep["failures"]))
cert = expect_json("certify broken", ["certify", str(bpath)], 1, "certificate")
check("certify broken: refused", cert is not None and not cert["granted"])
p = subprocess.run([BIN, "--json", "verify", "-"], input=json.dumps(broken),
                   capture_output=True, text=True)
check("verify from stdin: exit 1", p.returncode == 1)

# argument and input errors
rc, _, err = run("construct", "sym-alt", "--n", "5", "--p", "3")
check("sym-alt with p = 3 is rejected", rc == 2 and "p > 3" in err, err)
rc, _, _ = run("construct", "linear", "--n", "2", "--q", "2", "--p", "3")
check("SL_2(2) at p = 3 is rejected", rc == 2)
rc, _, _ = run("construct", "projective", "--n", "3", "--q", "7", "--p", "3")
check("PSL_3(7) at p = 3 is rejected", rc == 2)
rc, _, _ = run("verify", str(tmp / "missing.json"))
check("missing input file: exit 2", rc == 2)
junk = tmp / "junk.json"
junk.write_text("{not json")
rc, _, err = run("verify", str(junk))
check("malformed JSON: exit 2", rc == 2 and "parse" in err, err)
rc, _, _ = run("frobnicate")
check("unknown subcommand: exit 2", rc == 2)

# obstructions
for kind, n, q in [("GL", 2, 4), ("SL", 3, 4), ("GL", 2, 7), ("SU", 3, 2)]:
    doc = expect_json(f"obstruction {kind}({n},{q})",
                      ["construct", "obstruction", "--kind", kind, "--n", str(n),
                       "--q", str(q), "--p", "3"], 0, "obstruction")
rc, _, _ = run("construct", "obstruction", "--kind", "SL", "--n", "2", "--q",
               "7", "--p", "3")
check("no obstruction for SL_2(7): exit 2", rc == 2)

# homology
doc = expect_json("homology Alt(8)", ["homology", "--group", "Alt(8)", "--p", "3"],
                  0, "homology")
check("homology Alt(8): rank 2 and betti_1 >= 1",
      doc is not None and doc["rank"] == 2 and doc["betti"]["1"] >= 1)
doc = expect_json("homology C3xC3",
                  ["homology", "--group", "ElemAb(3,2)", "--p", "3"], 1,
                  "homology")
check("homology C3xC3: acyclic",
      doc is not None and all(v == 0 for v in doc["betti"].values()))
spec = tmp / "c3c3.json"
spec.write_text(json.dumps({"name": "C3xC3", "kind": "permutation", "n": 6,
                            "generators": ["(1,2,3)", "(4,5,6)"]}))
doc = expect_json("homology from a spec file",
                  ["homology", "--group", str(spec), "--p", "3"], 1, "homology")
check("spec file group: five nodes",
      doc is not None and doc["simplex_count"]["0"] == 5)

# search
for group, code, outcome in [("Alt(4)", 0, "found"), ("Alt(5)", 0, "found"),
                             ("Sym(6)", 1, "exhaustively-none"),
                             ("GL(2,4)", 1, "obstructed")]:
    doc = expect_json(f"search {group}", ["search", "--group", group, "--p", "3"],
                      code, "search")
    check(f"search {group}: {outcome}",
          doc is not None and doc["outcome"] == outcome)
doc = expect_json("forced search GL(2,4)",
                  ["search", "--group", "GL(2,4)", "--p", "3", "--force"], 1,
                  "search")
check("forced search GL(2,4): none",
      doc is not None and doc["outcome"] == "exhaustively-none")
doc = expect_json("search with max rank 1",
                  ["search", "--group", "Sym(6)", "--p", "3", "--max-rank", "1"],
                  2, "search")
check("max rank 1: capped", doc is not None and doc["outcome"] == "capped")
doc = expect_json("search under a small cap",
                  ["search", "--group", "Sym(6)", "--p", "3"], 2, "search",
                  env={"QUILLEN_ENUM_CAP": "100"})
check("small cap: capped", doc is not None and doc["outcome"] == "capped")
red = expect_json("search all Sym(5)",
                  ["search", "--group", "Sym(5)", "--p", "3", "--all"], 0,
                  "search")
full = expect_json("search all Sym(5) without frame reduction",
                   ["search", "--group", "Sym(5)", "--p", "3", "--all",
                    "--no-frame-reduction"], 0, "search")
check("frame reduction factor (p-1)^r",
      red is not None and full is not None
      and len(full["found"]) == 2 * len(red["found"]))
outs = [run("--json", "search", "--group", "Alt(5)", "--p", "3")[1]
        for _ in range(2)]
check("search output is byte-identical across runs", outs[0] == outs[1])

# output file and text mode
out = tmp / "out.json"
rc, stdout, _ = run("-o", str(out), "homology", "--group", "Sym(5)", "--p", "5")
check("-o writes the report", rc == 0 and out.exists()
      and json.loads(out.read_text())["type"] == "homology")
rc, stdout, _ = run("verify", str(tmp / "a8.json"))
check("text summary", rc == 0 and "admissible" in stdout
      and not stdout.lstrip().startswith("{"), stdout)

# acceptance suite
doc = expect_json("paper-suite subset", ["paper-suite", "--only", "2,9"], 0,
                  "suite")
check("paper-suite subset: two rows",
      doc is not None and [c["id"] for c in doc["criteria"]] == [2, 9])
doc = expect_json("paper-suite with a fault",
                  ["paper-suite", "--only", "9", "--fault", "9"], 1, "suite")
check("paper-suite with a fault: row fails",
      doc is not None and not doc["criteria"][0]["passed"])

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
