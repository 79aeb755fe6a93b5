#!/usr/bin/env python3
"""Validate `mglpa run` and `mglpa bench` JSON output against docs/report.schema.json."""
import json
import subprocess
import sys
from pathlib import Path

import jsonschema


def mglpa(tool, *args):
    proc = subprocess.run([tool, *map(str, args)], capture_output=True, text=True)
    if proc.returncode != 0:
        sys.exit(f"mglpa {' '.join(map(str, args))} exited {proc.returncode}: {proc.stderr}")
    return proc.stdout


def main():
    tool, schema_path, work = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
    schema = json.loads(schema_path.read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    graph = work / "schema_planted.mtx"
    mglpa(tool, "generate", "planted", "--communities", 4, "--size", 20, "--p-in", 0.4, "--p-out", 0.02,
          "--seed", 7, "--to", "mm", "-o", graph)
    empty = work / "schema_isolated.txt"
    empty.write_text("# vertices 3\n")

    cases = {
        "run mg": ["run", graph, "--variant", "mg", "--report", "json"],
        "run bm double": ["run", graph, "--variant", "bm", "--scan", "double", "--workers", 2, "--report", "json"],
        "run exact shuffled": ["run", graph, "--variant", "exact", "--seed-order", "shuffled:5", "--report", "json"],
        "run edgeless": ["run", empty, "--report", "json"],
        "bench": ["bench", graph, "--variants", "exact,bm,mg", "--repeats", 2, "--report", "json"],
    }
    failed = 0
    for name, args in cases.items():
        doc = json.loads(mglpa(tool, *args))
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        for e in errors:
            print(f"{name}: {'/'.join(map(str, e.path))}: {e.message}")
        print(f"{name}: {'ok' if not errors else 'INVALID'}")
        failed += bool(errors)
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
