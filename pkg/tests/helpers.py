"""Test-side helpers: monomials written out by hand, evaluated on a table."""

from __future__ import annotations

import re
from fractions import Fraction

from heronfrieze.measurements import MeasurementTable

_FACTOR = re.compile(r"([xS])(\d+)(?:\^(\d+))?")


def monomial(T: MeasurementTable, text: str) -> Fraction:
    """Evaluate e.g. ``"x12 x67^2 S234"`` (single-digit indices)."""
    v = Fraction(1)
    for tok in text.split():
        m = _FACTOR.fullmatch(tok)
        if not m:
            raise ValueError(f"bad factor {tok!r}")
        kind, idx, power = m.groups()
        idx = [int(c) for c in idx]
        base = T.x(*idx) if kind == "x" else T.s(*idx)
        v *= base ** int(power or 1)
    return v
