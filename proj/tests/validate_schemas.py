#!/usr/bin/env python3
# Copyright 2026 The folint Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runs the folint CLI and validates its JSON output against the shipped schemas."""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

EXAMPLE1 = "(x*y + y^2 + 5*x^3*y) dx + (-x^2 - x*y + y^3) dy"
EXAMPLE2 = "(y + x*y) dx + (1 + x*y^2 + x^2) dy"

RUNS = [
    ("verdict", ["check", "--form", EXAMPLE1, "--json"], 0),
    ("verdict", ["check", "--form", EXAMPLE2, "--json"], 2),
    ("verdict", ["check", "--form", "(y) dx - (x) dy", "--json", "--max-delta", "4"], 2),
    ("verdict", ["check", "--form", EXAMPLE2, "--json", "--max-delta", "0", "--assume-exhaustive"], 0),
    ("blowup_tree", ["reduce", "--form", "(-5*y^4 - 2*x^2*y^4 - 2*x^4*y^3 + x^7*y) dx + (x^3*y^3 + x^5*y^2 - x^8) dy"], 0),
    ("blowup_tree", ["reduce", "--form", "(-8*x*y^2 + 16*x^3 + 5*x^4) dx + (4*y^3 - 8*x^2*y) dy"], 0),
    ("blowup_tree", ["reduce", "--form", "(y - 1) dx - (x - 2) dy", "--at", "2,1"], 0),
    ("blowup_tree", ["reduce", "--form", "(-5*y^4 - 2*x^2*y^4 - 2*x^4*y^3 + x^7*y) dx + (x^3*y^3 + x^5*y^2 - x^8) dy",
                     "--max-depth", "3"], 2),
]


def main() -> int:
    binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {}
    registry = Registry()
    for name in ("verdict", "blowup_tree"):
        schema = json.loads((schema_dir / f"{name}.schema.json").read_text())
        jsonschema.Draft202012Validator.check_schema(schema)
        schemas[name] = schema
        registry = registry.with_resource(schema["$id"], Resource.from_contents(schema))

    failures = 0
    for name, args, expected_code in RUNS:
        proc = subprocess.run([binary, *args], capture_output=True, text=True, check=False)
        label = " ".join(args[:1] + args[2:3])
        if proc.returncode != expected_code:
            print(f"FAIL {label}: exit {proc.returncode}, expected {expected_code}\n{proc.stderr}")
            failures += 1
            continue
        validator = jsonschema.Draft202012Validator(schemas[name], registry=registry)
        errors = list(validator.iter_errors(json.loads(proc.stdout)))
        for e in errors[:3]:
            print(f"FAIL {label}: {e.json_path}: {e.message}")
        failures += 1 if errors else 0
        if not errors:
            print(f"ok   {name}: {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
