#!/usr/bin/env python3
# Copyright 2026 The divsel Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Runs every JSON-producing divsel subcommand and validates the output."""

import argparse
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema


def run(divsel, args, stdin=None):
    proc = subprocess.run([divsel, *args], input=stdin, capture_output=True,
                          text=True, check=False)
    if proc.returncode != 0:
        raise SystemExit(f"divsel {' '.join(args)} exited {proc.returncode}: "
                         f"{proc.stderr.strip()}")
    return proc.stdout


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--divsel", required=True)
    parser.add_argument("--schemas", required=True, type=pathlib.Path)
    opts = parser.parse_args()

    validators = {}
    for path in sorted(opts.schemas.glob("*.schema.json")):
        schema = json.loads(path.read_text())
        jsonschema.Draft202012Validator.check_schema(schema)
        validators[path.name.removesuffix(".schema.json")] = (
            jsonschema.Draft202012Validator(schema))

    with tempfile.TemporaryDirectory() as tmp:
        tmp = pathlib.Path(tmp)
        synth = tmp / "synth.csv"
        synth.write_text(run(opts.divsel, ["gen-synth", "--seed", "3"]))
        dense = ["--input", str(synth), "--labels", "8", "--header"]

        small = tmp / "small.csv"
        rows = []
        for i in range(40):
            rows.append(",".join(str((i * (j + 3) + j) % 3) for j in range(9)) +
                        f",{i % 2}")
        small.write_text("\n".join(rows) + "\n")

        truth = tmp / "truth.csv"
        truth.write_text("1,0\n1,1\n0,0\n")
        pred = tmp / "pred.csv"
        pred.write_text("1,1\n0,1\n0,0\n")

        cases = [
            ("run_report", ["select", *dense, "--k", "5"]),
            ("run_report", ["select", *dense, "--k", "5", "--algorithm",
                            "greedy"]),
            ("run_report", ["select", *dense, "--k", "5", "--mode",
                            "distributed", "--machines", "3"]),
            ("run_report", ["select", *dense, "--k", "5", "--mode",
                            "streaming"]),
            ("run_report", ["select", *dense, "--k", "5", "--binning",
                            "none"]),
            ("approximation_report", ["oracle", "--input", str(small),
                                      "--labels", "1", "--k", "3",
                                      "--seeds", "0,1,2"]),
            ("metrics", ["eval-metrics", "--truth", str(truth),
                         "--predicted", str(pred)]),
            ("bench", ["bench", "--k", "10,16", "--modes",
                       "centralized,distributed,streaming"]),
        ]
        failures = 0
        for name, args in cases:
            doc = json.loads(run(opts.divsel, args))
            errors = sorted(validators[name].iter_errors(doc), key=str)
            status = "ok" if not errors else "INVALID"
            print(f"{status:8} {name:22} divsel {' '.join(args[:1])} "
                  f"{' '.join(a for a in args[1:] if a.startswith('--'))}")
            for error in errors[:5]:
                print(f"    {error.json_path}: {error.message}")
            failures += bool(errors)

        out = tmp / "out.json"
        run(opts.divsel, ["select", *dense, "--k", "3", "--output", str(out)])
        validators["run_report"].validate(json.loads(out.read_text()))

    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
