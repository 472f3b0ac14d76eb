"""Runs the CLI on small inputs and validates every output against schemas/."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

masure, repo = sys.argv[1], pathlib.Path(sys.argv[2])
schemas = {p.stem: json.loads(p.read_text()) for p in (repo / "schemas").glob("*.json")}
registry = Registry().with_resources((s["$id"], Resource.from_contents(s)) for s in schemas.values())
failures = []


def validate(name, doc, label):
    try:
        jsonschema.Draft202012Validator(schemas[name], registry=registry).validate(doc)
    except jsonschema.ValidationError as e:
        failures.append(f"{label}: {e.message} at {list(e.absolute_path)}")


def run(args, schema, expect, stdin=None, env=None):
    p = subprocess.run([masure, *args], input=stdin, capture_output=True, text=True, env=env)
    label = " ".join(args)
    if p.returncode != expect:
        failures.append(f"{label}: exit {p.returncode}, expected {expect}: {p.stdout[:300]} {p.stderr[:300]}")
        return None
    doc = json.loads(p.stdout)
    validate(schema, doc, label)
    return p.stdout


with tempfile.TemporaryDirectory() as tmp:
    tmp = pathlib.Path(tmp)
    (tmp / "a2.json").write_text('{"matrix": [[2, -1], [-1, 2]]}')
    (tmp / "affine.json").write_text('{"matrix": [[2, -2], [-2, 2]]}')
    (tmp / "bad.json").write_text('{"matrix": [[2, 0], [-1, 2]]}')
    a2, bad = str(tmp / "a2.json"), str(tmp / "bad.json")

    out = run(["km", "validate", "--matrix", a2], "km_validate", 0)
    run(["km", "validate", "--matrix", bad], "km_validate", 1)
    out = run(["km", "roots", "--matrix", a2, "--height", "2"], "km_roots", 0)
    if out and json.loads(out)["count"] != 6:
        failures.append("km roots: A2 should have 6 roots of height <= 2")
    run(["km", "roots", "--matrix", str(tmp / "affine.json"), "--height", "3"], "km_roots", 0)
    run(["km", "weyl", "--matrix", a2, "--length", "3"], "km_weyl", 0)
    run(["km", "cone", "--matrix", a2, "--point", "1,-1/2"], "km_cone", 0)
    out = run(["km", "dominance", "--matrix", a2, "--x", "1,1", "--y", "1,1"], "km_dominance", 0)
    if out and json.loads(out)["relation"] != "EQ":
        failures.append("km dominance: x = y should give EQ")
    run(["km", "roots", "--matrix", str(tmp / "missing.json"), "--height", "1"], "error", 2)
    run(["km", "roots"], "error", 2)

    straight = json.dumps({"system": {"matrix": [[2, -1], [-1, 2]]},
                           "path": {"breakpoints": [{"num": 0, "den": 1}, {"num": 1, "den": 1}],
                                    "vertices": [[{"num": 0, "den": 1}, {"num": 0, "den": 1}],
                                                 [{"num": 1, "den": 1}, {"num": 2, "den": 1}]]}})
    run(["path", "verify"], "growth_report", 0, stdin=straight)
    doc = run(["path", "random", "--seed", "7"], "path_document", 0)
    if doc:
        run(["path", "verify"], "growth_report", 0, stdin=doc)
    doc = run(["path", "random", "--seed", "7", "--mutate"], "path_document", 0)
    if doc and json.loads(doc)["mutated"]:
        out = run(["path", "verify"], "growth_report", 1, stdin=doc)
        if out and "first_failure" not in json.loads(out):
            failures.append("path verify: a mutated path must name its failing breakpoint")
    folded = run(["path", "fold", "--t", "1/2", "--root", "1,0", "--level", "0", "--illegal"], "path_document", 0,
                 stdin=json.dumps({"system": {"matrix": [[2, -1], [-1, 2]]},
                                   "path": {"breakpoints": [{"num": 0, "den": 1}, {"num": 1, "den": 1}],
                                            "vertices": [[{"num": -1, "den": 1}, {"num": -1, "den": 2}],
                                                         [{"num": 1, "den": 1}, {"num": 1, "den": 2}]]}}))
    if folded:
        run(["path", "verify"], "growth_report", 1, stdin=folded)

    env = {"MASURE_CONFIG_DIR": str(repo / "configs")}
    report = tmp / "smoke_report.json"
    run(["verify-theorem", "--config", "smoke.json", "--output", str(report)], "campaign_summary", 0, env=env)
    validate("verification_report", json.loads(report.read_text()), "smoke report")
    validate("campaign_config", json.loads((repo / "configs" / "smoke.json").read_text()), "smoke config")
    first = report.read_bytes()
    run(["verify-theorem", "--config", "smoke.json", "--output", str(report), "--serial"], "campaign_summary", 0, env=env)
    if report.read_bytes() != first:
        failures.append("verify-theorem: serial and parallel reports differ")
    out = run(["verify-theorem", "--config", "empty.json", "--output", str(tmp / "e.json")], "campaign_summary", 0, env=env)
    if out and json.loads(out)["summary"]["trials"] != 0:
        failures.append("verify-theorem: trials = 0 should give an empty report")
    (tmp / "broken.json").write_text('{"model": {"kind": "torus"}}')
    run(["verify-theorem", "--config", str(tmp / "broken.json")], "error", 2)
    (tmp / "badq.json").write_text('{"model": {"kind": "sl3", "q": 6}, "trials": 1}')
    run(["verify-theorem", "--config", str(tmp / "badq.json")], "error", 2)

for f in failures:
    print("FAIL", f)
print(f"{'OK' if not failures else 'FAILED'}: schema checks")
sys.exit(1 if failures else 0)
