"""Machine-readable run reports emitted by the command line."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Any, Optional, Union

from .quadrature import McEstimate

Measure = Union[float, int, Fraction]


def format_rational(q: Fraction) -> str:
    """``p/q`` in lowest terms, no whitespace, denominator always written."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def _measure(v: Measure) -> Union[float, int, str]:
    if isinstance(v, Fraction):
        return format_rational(v)
    return v


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    measured: Measure
    tolerance: Measure

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "status": "pass" if self.passed else "fail",
            "measured": _measure(self.measured),
            "tolerance": _measure(self.tolerance),
        }


def check_le(name: str, measured: Measure, tolerance: Measure) -> Check:
    return Check(name, measured <= tolerance, measured, tolerance)


def tagged(value: Any) -> dict[str, Any]:
    """Wrap a result in its tagged JSON form."""
    if isinstance(value, McEstimate):
        return {
            "type": "estimate",
            "re": value.mean.real,
            "im": value.mean.imag,
            "stderr": value.stderr,
            "stderr_im": value.stderr_im,
            "n_samples": value.n_samples,
            "seed": value.seed,
            "n_rejected": value.n_rejected,
        }
    if isinstance(value, (Fraction, int)) and not isinstance(value, bool):
        return {"type": "rational", "value": format_rational(Fraction(value))}
    if isinstance(value, float):
        return {"type": "float", "value": value}
    if isinstance(value, complex):
        return {"type": "complex", "re": value.real, "im": value.imag}
    raise TypeError(f"cannot tag result of type {type(value).__name__}")


def summary(checks: list[Check]) -> dict[str, Any]:
    failed = sum(not c.passed for c in checks)
    return {"type": "summary", "passed": len(checks) - failed, "failed": failed}


@dataclass
class RunReport:
    command: str
    inputs: dict[str, Any]
    result: dict[str, Any]
    checks: list[Check] = field(default_factory=list)
    seed: Optional[int] = None
    elapsed_ms: int = 0
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict[str, Any]:
        out = {
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "checks": [c.to_dict() for c in self.checks],
            "seed": self.seed,
            "elapsed_ms": self.elapsed_ms,
        }
        if self.details:
            out["details"] = self.details
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, allow_nan=False)


def load_schema() -> dict[str, Any]:
    text = resources.files("epiihs").joinpath("schemas/run_report.schema.json").read_text()
    return json.loads(text)
