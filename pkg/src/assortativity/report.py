"""JSON serialization: rationals travel as lowest-terms "p/q" strings."""

from __future__ import annotations

import dataclasses
import enum
import json
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Any

from .matrix import MatchingMatrix
from .search import (
    CharacterizationReport,
    CounterexampleCertificate,
    RecoveredParams,
    ReproReport,
    SuiteReport,
)

SIGNIFICANT_DIGITS = 15


def decimal_string(x: Fraction) -> str:
    """Advisory decimal rendering with 15 significant digits."""
    with localcontext() as ctx:
        ctx.prec = SIGNIFICANT_DIGITS
        return str(Decimal(x.numerator) / Decimal(x.denominator))


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def to_jsonable(obj: Any) -> Any:
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, int):
        return obj
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, MatchingMatrix):
        return [str(v) for v in obj]
    if isinstance(obj, SuiteReport):
        return {
            "index": obj.index,
            "ok": obj.ok,
            "config": to_jsonable(obj.config),
            "axioms": [to_jsonable(t) for t in obj.tallies.values()],
        }
    if isinstance(obj, RecoveredParams):
        out = {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
        out["in_family"] = obj.in_family
        out["params"] = f"({obj.alpha},{obj.beta})"
        return out
    if isinstance(obj, CharacterizationReport):
        return {
            "index": obj.index,
            "verdict": obj.verdict,
            "satisfies_axioms": obj.suite.ok,
            "in_linear_family": obj.recovered.in_family,
            "suite": to_jsonable(obj.suite),
            "recovered": to_jsonable(obj.recovered),
        }
    if isinstance(obj, ReproReport):
        return {
            "ok": obj.ok,
            "certificates": {k: to_jsonable(v) for k, v in obj.certificates.items()},
            "certificate_valid": obj.certificate_valid,
            "suites": {k: to_jsonable(v) for k, v in obj.suites.items()},
            "recoveries": {k: to_jsonable(v) for k, v in obj.recoveries.items()},
        }
    if dataclasses.is_dataclass(obj):
        # AxiomReport, AxiomTally, CounterexampleCertificate, SampleConfig
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def build_report(
    command: str,
    config_echo: dict,
    results: list,
    certificates: list,
    exit_code: int,
    meaning: str,
) -> dict:
    return {
        "command": command,
        "config_echo": to_jsonable(config_echo),
        "results": to_jsonable(results),
        "certificates": to_jsonable(certificates),
        "exit_semantics": {"code": exit_code, "meaning": meaning},
    }


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"

