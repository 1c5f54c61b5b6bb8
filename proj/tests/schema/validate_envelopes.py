"""Run each CLI command with JSON output and validate the envelope.

Every object carrying num/den must match the rational definition and be in
lowest terms with a positive denominator.
"""

import json
import math
import subprocess
import sys

import jsonschema

COMMANDS = [
    ["count", "--a", "3", "--n", "5", "--method", "formula", "--report", "--columns"],
    ["count", "--a", "2999", "--n", "6007", "--report"],
    ["profile", "--n", "12"],
    ["scan", "--n-min", "3", "--n-max", "40"],
    ["reduce", "--u", "1,2", "--v", "3,1"],
    ["rho", "--name", "golden", "--n-max", "60", "--primes"],
    ["rho", "--value", "1/2", "--n-min", "5", "--n-max", "30", "--policy", "nearest"],
    ["phimean", "--a", "200"],
    ["density", "--r", "5"],
    ["discrepancy", "--a", "5", "--n", "7", "--q", "3"],
    ["selftest", "--quick"],
]


def rationals(node):
    if isinstance(node, dict):
        if "num" in node and "den" in node:
            yield node
        for value in node.values():
            yield from rationals(value)
    elif isinstance(node, list):
        for value in node:
            yield from rationals(value)


def main():
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    rational_validator = jsonschema.Draft202012Validator({"$defs": schema["$defs"], "$ref": "#/$defs/rational"})
    failures = 0
    for args in COMMANDS:
        proc = subprocess.run([binary, "--format", "json", *args], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != 0:
            print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        envelope = json.loads(proc.stdout)
        errors = [e.message for e in validator.iter_errors(envelope)]
        seen = 0
        for r in rationals(envelope):
            errors += [e.message for e in rational_validator.iter_errors(r)]
            num, den = int(r["num"]), int(r["den"])
            if den <= 0 or math.gcd(num, den) != 1:
                errors.append(f"rational {num}/{den} not reduced")
            seen += 1
        if errors:
            print(f"FAIL {label}: {errors[:3]}")
            failures += 1
        else:
            print(f"ok   {label} ({seen} rationals)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
