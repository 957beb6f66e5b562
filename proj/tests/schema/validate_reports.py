"""Run sqcheck JSON invocations and validate each document against the report schema."""

import argparse
import json
import subprocess
import sys

import jsonschema

INVOCATIONS = [
    (0, ["action", "--space", "bso", "--n", "5", "--op", "q1", "--element", "w2", "--format", "json"]),
    (0, ["action", "--space", "bo", "--n", "3", "--op", "sq", "--k", "2", "--element", "w1*w2", "--format", "json"]),
    (0, ["verify", "lemma1", "--n", "2", "--max-deg", "24", "--format", "json"]),
    (1, ["verify", "lemma1", "--n", "2", "--max-deg", "24", "--seed-fault", "--format", "json"]),
    (0, ["verify", "lemma2", "--n", "3", "--max-deg", "30", "--format", "json"]),
    (0, ["verify", "thm3", "--n", "5", "--max-deg", "30", "--format", "json"]),
    (0, ["verify", "thm1", "--n", "2", "--max-deg", "40", "--format", "json"]),
    (0, ["report", "poincare", "--space", "bso", "--n", "3", "--max-deg", "6", "--format", "json"]),
    (0, ["report", "generators", "--space", "bso", "--n", "4", "--max-deg", "20", "--format", "json"]),
    (0, ["report", "margolis", "--space", "bso", "--n", "2", "--max-deg", "12", "--format", "json"]),
    (0, ["report", "splitting", "--n", "2", "--max-deg", "12", "--format", "json"]),
]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--sqcheck", required=True)
    parser.add_argument("--schema", required=True)
    args = parser.parse_args()

    with open(args.schema, encoding="utf-8") as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    failures = 0
    for expected, argv in INVOCATIONS:
        proc = subprocess.run([args.sqcheck] + argv, capture_output=True, text=True, check=False)
        label = " ".join(argv)
        if proc.returncode != expected:
            print(f"FAIL exit {proc.returncode} != {expected}: {label}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(proc.stdout)))
        if errors:
            print(f"FAIL schema: {label}: {errors[0].message}")
            failures += 1
        else:
            print(f"ok {label}")
    print(f"{len(INVOCATIONS) - failures}/{len(INVOCATIONS)} documents valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
