"""Validates every fixture against the element schema."""
import json
import pathlib
import sys

import jsonschema

here = pathlib.Path(__file__).parent
schema = json.loads((here / "element.schema.json").read_text())
names = [line.split("\t")[0] for line in (here / "manifest.tsv").read_text().splitlines() if line]
for name in names:
    jsonschema.validate(json.loads((here / f"{name}.json").read_text()), schema)
print(f"{len(names)} fixtures valid")
sys.exit(0 if len(names) == 20 else 1)
