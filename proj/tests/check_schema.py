"""Validate several CLI reports against docs/report-schema.json."""
import json
import subprocess
import sys

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)

runs = [
    ["asm", "count", "--n-max", "5"],
    ["asm", "count", "--n", "4", "--refined"],
    ["asm", "enumerate", "--n", "3", "--list"],
    ["verify", "notyetdone", "--n-max", "1"],
    ["verify", "done", "--n-max", "3", "--timings"],
    ["verify", "prop-bottom", "--n", "2", "--s", "1/3"],
    ["verify", "prop-top", "--n-max", "1"],
    ["verify", "hankel", "--n-max", "2"],
    ["verify", "notyetdone", "--n", "1", "--x", "2", "--x", "1/2"],
    ["qlegendre", "print", "--n-max", "2"],
    ["qlegendre", "ortho-check", "--n-max", "2"],
    ["fit-recurrence", "--n-max", "20"],
]
failed = 0
for args in runs:
    proc = subprocess.run([cli, *args], capture_output=True, text=True)
    if proc.returncode != 0:
        print("exit", proc.returncode, args, proc.stderr)
        failed += 1
        continue
    try:
        jsonschema.validate(json.loads(proc.stdout), schema)
    except jsonschema.ValidationError as e:
        print("schema violation", args, e.message)
        failed += 1
sys.exit(1 if failed else 0)
