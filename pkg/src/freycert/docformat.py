"""Canonical document serialization shared by certificates, reports, CLI.

Every integer in a payload is rendered as a decimal string so that consumers
with 64-bit JSON parsers can never truncate silently.  Key order is the
insertion order of the dicts built by the callers, and json.dumps preserves
it, which makes canonical_json byte-stable.
"""

from __future__ import annotations

import json

SCHEMA_VERSION = 1


def stringify(obj):
    """Recursively turn ints into decimal strings.

    Bools are left alone, and so is the structural "schema" marker; every
    mathematical integer in a payload gets the string treatment.
    """
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, (list, tuple)):
        return [stringify(v) for v in obj]
    if isinstance(obj, dict):
        return {
            k: (v if k == "schema" and isinstance(v, int) else stringify(v))
            for k, v in obj.items()
        }
    return obj


def canonical_json(document: dict) -> str:
    return json.dumps(stringify(document), ensure_ascii=False, indent=2)
