"""Run every subcommand, validate its JSON against the schema and check exit codes."""
import json
import pathlib
import subprocess
import sys

import jsonschema

binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])

CASES = [
    (["eval-theta"], 0),
    (["eval-theta", "--char", "11|11"], 0),
    (["eval-grad"], 0),
    (["eval-det", "--tau", "0.1,1.2,0.3,0.4,-0.2,1.5"], 0),
    (["classify-set", "--set", "{1,2,5,10}"], 0),
    (["orbit-census"], 0),
    (["char-table"], 0),
    (["check-member", "--matrix", "1,0,0,0,0,1,0,0,0,0,1,0,0,0,0,1"], 0),
    (["check-member", "--matrix", "0,0,1,0,0,0,0,1,-1,0,0,0,0,-1,0,0"], 0),
    (["--samples", "3", "verify-riemann"], 0),
    (["--samples", "2", "verify-jacobi"], 1),
    (["--samples", "2", "verify-transform"], 0),
    (["--samples", "3", "catalog"], 0),
    (["cusp-gens", "--check", "3"], 0),
    (["grad-map", "--matrix", "1,2,4,0,0,1,0,0,0,0,1,0,0,4,-2,1"], 0),
    (["pattern-census"], 0),
    (["verify-lemmas"], 0),
]

failures = 0
for args, expected in CASES:
    outs = []
    for _ in range(2):
        p = subprocess.run([binary, *args], capture_output=True, text=True)
        outs.append(p.stdout)
    doc = json.loads(outs[0])
    schema = json.loads((schema_dir / f"{doc['command']}.schema.json").read_text())
    problems = []
    if p.returncode != expected:
        problems.append(f"exit {p.returncode}, expected {expected}")
    if outs[0] != outs[1]:
        problems.append("output differs between runs")
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as e:
        problems.append(f"schema: {e.message} at {list(e.absolute_path)}")
    if (p.returncode == 0) != doc["pass"]:
        problems.append("pass flag disagrees with exit code")
    status = "ok" if not problems else "FAILED " + "; ".join(problems)
    print(" ".join(args), "->", status)
    failures += bool(problems)

sys.exit(1 if failures else 0)
