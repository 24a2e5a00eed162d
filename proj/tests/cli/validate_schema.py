"""Validates CLI exports and reports against the shipped JSON schemas."""
import json
import subprocess
import sys

import jsonschema

cli, schema_dir = sys.argv[1], sys.argv[2]
with open(f"{schema_dir}/poset.schema.json") as f:
    poset_schema = json.load(f)
with open(f"{schema_dir}/report.schema.json") as f:
    report_schema = json.load(f)

catalog = json.loads(subprocess.run([cli, "catalog", "--format", "json"], check=True,
                                    capture_output=True, text=True).stdout)
for row in catalog:
    args = ["--type", row["family"], "--n", str(row["n"]), "--weight", str(row["weight"])]
    out = subprocess.run([cli, "export", *args, "--format", "json"], check=True,
                         capture_output=True, text=True).stdout
    doc = json.loads(out)
    jsonschema.validate(doc, poset_schema)
    assert len(doc["elements"]) == row["elements"], row
    assert doc["coxeter_number"] == row["coxeter_number"], row

out = subprocess.run([cli, "verify", "--type", "A", "--n", "3", "--weight", "2", "--all"],
                     check=True, capture_output=True, text=True).stdout
jsonschema.validate(json.loads(out), report_schema)
print(f"validated {len(catalog)} exports and one report")
