"""Validate fank JSON reports against docs/report.schema.json."""
import json
import pathlib
import subprocess
import sys

import jsonschema

fank, root = sys.argv[1], pathlib.Path(sys.argv[2])
schema = json.loads((root / "docs" / "report.schema.json").read_text())
validator = jsonschema.Draft202012Validator(schema)

sources = sorted(str(p) for p in (root / "data" / "fans").glob("*.fan"))
failures = 0
for command in ("check", "classify"):
    for src in sources:
        run = subprocess.run([fank, command, "--json", src], capture_output=True, text=True)
        if run.returncode not in (0, 1):
            print(f"FAIL {command} {src}: exit {run.returncode}: {run.stderr.strip()}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(run.stdout)))
        for e in errors:
            print(f"FAIL {command} {src}: {e.message}")
        failures += bool(errors)

# batch output is one report per line
run = subprocess.run([fank, "classify", "--json", "--batch", str(root / "data" / "fans")], capture_output=True, text=True)
lines = [l for l in run.stdout.splitlines() if l.strip()]
if len(lines) != len(sources):
    print(f"FAIL batch: {len(lines)} reports for {len(sources)} files")
    failures += 1
for line in lines:
    failures += bool(list(validator.iter_errors(json.loads(line))))

print(f"{len(sources)} fans, {failures} failures")
sys.exit(1 if failures else 0)
