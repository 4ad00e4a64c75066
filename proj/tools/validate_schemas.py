#!/usr/bin/env python3
"""Validate fixtures and live CLI reports against schemas/."""
import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

root = pathlib.Path(__file__).resolve().parent.parent
cli = sys.argv[1] if len(sys.argv) > 1 else str(root / "build" / "exotic")
schemas = {p.name: json.loads(p.read_text()) for p in (root / "schemas").glob("*.json")}
registry = Registry().with_resources(
    (s["$id"], Resource.from_contents(s)) for s in schemas.values())
registry = registry.with_resources(
    (name, Resource.from_contents(s)) for name, s in schemas.items())


def check(schema_name, doc, label):
    schema = schemas[schema_name]
    v = jsonschema.Draft202012Validator(schema, registry=registry)
    errors = sorted(v.iter_errors(doc), key=lambda e: list(e.path))
    for e in errors:
        print(f"{label}: /{'/'.join(map(str, e.path))}: {e.message}")
    return not errors


def run(*args):
    out = subprocess.run([cli, *args], capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


fx = root / "fixtures"
ok = True
for name in ["critical_sp4.json", "equal_sp4.json", "equal_sp4_with_x.json", "a0_zero.json"]:
    ok &= check("point.v1.json", json.loads((fx / name).read_text()), name)
ok &= check("exotic_vector.v1.json", json.loads((fx / "vector_nilpotent.json").read_text()), "vector_nilpotent.json")
ok &= check("marked_partition.v1.json", json.loads((fx / "marked_example.json").read_text()), "marked_example.json")

ok &= check("relation_report.v1.json", run("hecke", "verify", "--rank", "2", "--box", "1"), "hecke verify")
ok &= check("classification_report.v1.json", run("orbits", "enumerate", "--input", str(fx / "critical_sp4.json")), "orbits")
ok &= check("classification_report.v1.json", run("classify", "lambda", "--input", str(fx / "equal_sp4.json")), "lambda")
ok &= check("params_report.v1.json", run("params", "classify", "--input", str(fx / "critical_sp4.json")), "params")
ok &= check("standard_module_report.v1.json",
            run("springer", "dim", "--input", str(fx / "equal_sp4_with_x.json"), "--char", "1,0"), "springer")
for item in run("strict", "enumerate", "--rank", "3")["partitions"]:
    ok &= check("marked_partition.v1.json", item["sigma"], "strict " + item["text"])

print("schemas ok" if ok else "schema violations found")
sys.exit(0 if ok else 1)
