"""Machine-checkable verdicts.

A certificate names the check, carries the boolean verdict with whatever
witness payload the check produced, and digests its inputs so re-running
the same check on the same inputs reproduces the verdict byte for byte.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .scalars import GaussRational, format_rational

TOOL_VERSION = "0.1.0"


def jsonable(value: Any) -> Any:
    """Render exact values into canonical JSON-compatible data."""
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, GaussRational):
        return {"re": format_rational(value.re), "im": format_rational(value.im)}
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, (str, int, bool)) or value is None:
        return value
    if hasattr(value, "to_payload"):
        return jsonable(value.to_payload())
    return repr(value)


def digest(data: Any) -> str:
    blob = json.dumps(jsonable(data), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


@dataclass(frozen=True)
class Certificate:
    check: str
    verdict: bool
    witness: Any = None
    inputs_digest: str = ""
    version: str = TOOL_VERSION
    details: Any = field(default=None, compare=False)

    def to_json(self) -> str:
        payload = {
            "check": self.check,
            "verdict": self.verdict,
            "witness": jsonable(self.witness),
            "inputs_digest": self.inputs_digest,
            "version": self.version,
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))

    def __bool__(self) -> bool:
        return self.verdict


def certificate(check: str, verdict: bool, witness=None, inputs=None, details=None) -> Certificate:
    return Certificate(check=check, verdict=bool(verdict), witness=witness,
                       inputs_digest=digest(inputs) if inputs is not None else "",
                       details=details)
