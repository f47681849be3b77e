"""Structured outcome of one identity check."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Sequence, Union

from ..exactnum import format_rat, rat_from_json, rat_to_json

__all__ = ["CheckReport", "exact_report", "float_report", "skipped", "report_from_json"]

HOLDS, VIOLATED, SKIPPED = "holds", "violated", "skipped"


@dataclass(frozen=True)
class CheckReport:
    identity: str
    params: dict[str, Any]
    residuals: tuple[Union[Fraction, float], ...] = ()
    verdict: str = HOLDS
    reason: Optional[str] = None
    exact: bool = True

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    @property
    def violated(self) -> bool:
        return self.verdict == VIOLATED

    def sort_key(self):
        return (self.identity, sorted((k, repr(v)) for k, v in self.params.items()))

    def to_json(self) -> dict:
        if self.exact:
            res = [rat_to_json(r) for r in self.residuals]
        else:
            res = [float(r) for r in self.residuals]
        out = {"identity": self.identity, "params": dict(self.params),
               "residuals": res, "verdict": self.verdict}
        if self.reason is not None:
            out["reason"] = self.reason
        return out

    def summary(self) -> str:
        params = ",".join(f"{k}={v}" for k, v in self.params.items())
        line = f"{self.identity}[{params}] {self.verdict}"
        if self.violated:
            if self.exact:
                line += " residuals=" + ",".join(format_rat(r) for r in self.residuals)
            else:
                line += " residuals=" + ",".join(f"{r:.3e}" for r in self.residuals)
        if self.reason:
            line += f" ({self.reason})"
        return line


def exact_report(identity: str, params: dict, residuals: Sequence[Fraction]) -> CheckReport:
    res = tuple(residuals)
    verdict = HOLDS if all(r == 0 for r in res) else VIOLATED
    return CheckReport(identity, params, res, verdict)


def float_report(identity: str, params: dict, residuals: Sequence[float],
                 scale: float, tol: float) -> CheckReport:
    """Verdict ``holds`` iff every ``|residual| <= tol * scale``."""
    res = tuple(float(r) for r in residuals)
    ok = math.isfinite(scale) and all(abs(r) <= tol * scale for r in res)
    return CheckReport(identity, params, res, HOLDS if ok else VIOLATED, exact=False)


def skipped(identity: str, params: dict, reason: str,
            residuals: Sequence[Fraction] = ()) -> CheckReport:
    """A check whose hypotheses fail; residuals, if any, are informational."""
    return CheckReport(identity, params, tuple(residuals), SKIPPED, reason)


def report_from_json(obj: dict) -> CheckReport:
    res = obj.get("residuals", [])
    exact = all(isinstance(r, list) for r in res)
    residuals = tuple(rat_from_json(r) for r in res) if exact else tuple(float(r) for r in res)
    return CheckReport(obj["identity"], dict(obj.get("params", {})), residuals,
                       obj["verdict"], obj.get("reason"), exact)
