"""Validate a JSON document against one of the shipped schemas.

usage: validate.py <schema.json> <document.json>
"""
import json
import sys

import jsonschema


def main() -> int:
    schema_path, doc_path = sys.argv[1:3]
    with open(schema_path) as f:
        schema = json.load(f)
    with open(doc_path) as f:
        doc = json.load(f)
    try:
        jsonschema.Draft202012Validator.check_schema(schema)
        jsonschema.Draft202012Validator(schema).validate(doc)
    except jsonschema.ValidationError as e:
        print(f"{doc_path}: {e.message} at {list(e.absolute_path)}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
