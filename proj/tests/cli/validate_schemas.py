"""Run each subcommand in both formats; validate JSON and check it agrees with CSV."""

import csv
import io
import json
import math
import pathlib
import subprocess
import sys

import jsonschema

CASES = [
    ("verify", ["--samples", "8"]),
    ("entangle", ["--theta-grid", "0:1.5707963267948966:5", "--all-basis"]),
    ("berry", ["--example", "4", "--theta", "0.5"]),
    ("berry", ["--theta", "1.1", "--n1", "3", "--n2", "2", "--steps", "1024"]),
    ("spectrum", ["--theta", "0.9", "--n1", "-2", "--n2", "1"]),
    ("decompose", ["--theta", "1.0471975511965976"]),
]


def run(tool, command, args, fmt):
    proc = subprocess.run([tool, command, *args, "--format", fmt], capture_output=True, text=True)
    if proc.returncode != 0:
        raise AssertionError(f"{command} {args} exited {proc.returncode}: {proc.stderr}")
    return proc.stdout


def same_cell(text, value):
    if isinstance(value, bool):
        return text == ("true" if value else "false")
    if isinstance(value, (int, float)):
        parsed = float(text)
        return parsed == value or (math.isnan(parsed) and math.isnan(value))
    return text == value


def check(tool, schema_dir, command, args):
    schema = json.loads((schema_dir / f"{command}.schema.json").read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    doc = json.loads(run(tool, command, args, "json"))
    jsonschema.validate(doc, schema, cls=jsonschema.Draft202012Validator)

    rows = list(csv.reader(io.StringIO(run(tool, command, args, "csv"))))
    header, body = rows[0], rows[1:]
    assert header == doc["columns"], f"{command}: CSV header {header} != JSON columns {doc['columns']}"
    assert len(body) == len(doc["rows"]), f"{command}: row count differs"
    assert body, f"{command}: no rows"
    for line, record in zip(body, doc["rows"]):
        assert list(record) == header, f"{command}: JSON row keys out of order"
        for name, text in zip(header, line):
            assert same_cell(text, record[name]), f"{command}: {name} csv={text} json={record[name]}"
    assert doc["status"] == "pass"


def main():
    tool, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    failures = 0
    for command, args in CASES:
        try:
            check(tool, schema_dir, command, args)
            print(f"ok   {command} {' '.join(args)}")
        except (AssertionError, jsonschema.ValidationError) as exc:
            failures += 1
            print(f"FAIL {command} {' '.join(args)}: {exc}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
