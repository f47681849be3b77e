"""Run a selection of identity checks on one polygon."""

from __future__ import annotations

from typing import Iterable, Optional

from ..frieze import build_plane_frieze, verify_diamond
from ..measurements import build_table
from .alternating import check_main_theorem
from .oracle import check_oracle
from .relations import (
    anticlockwise_quads,
    check_chord_relation,
    check_cor_chord,
    check_cor_diamonds,
    check_det3,
    check_plane_det,
    check_ptolemy_s,
    cyclic_hypothesis,
    plane_det_degrees,
    sample,
    valid_cor_chord_params,
)
from .report import CheckReport, exact_report, skipped

__all__ = ["TAGS", "parse_selection", "default_budget", "run_all_checks", "FULL_ENUMERATION_MAX_N",
           "DEFAULT_SAMPLE"]

TAGS = ("diamonds", "det3", "cor-diamonds", "chord", "cor-chord",
        "plane-det", "main-theorem", "oracle")

FULL_ENUMERATION_MAX_N = 10
DEFAULT_SAMPLE = 500


def parse_selection(text: str) -> set[str]:
    """Comma list of tags; ``all`` expands to every tag."""
    tags = {t.strip() for t in text.split(",") if t.strip()}
    if "all" in tags:
        return set(TAGS)
    unknown = tags - set(TAGS)
    if unknown:
        raise ValueError(f"unknown check tag(s): {', '.join(sorted(unknown))}; "
                         f"choose from {', '.join(TAGS)}, all")
    return tags


def default_budget(n: int) -> Optional[int]:
    return None if n <= FULL_ENUMERATION_MAX_N else DEFAULT_SAMPLE


def _diamonds(P) -> list[CheckReport]:
    F = build_plane_frieze(P)
    return [exact_report("diamonds", {"a": a, "b": b}, verify_diamond(D))
            for (a, b), D in F.diamonds()]


def run_all_checks(P, selection: Iterable[str], budget: Optional[int] = None,
                   seed: int = 0) -> list[CheckReport]:
    """Reports for every selected check, sorted by ``(identity, params)``.

    Families that grow with n (quadruples, ``(m, q, r)`` triples) are
    enumerated fully up to ``FULL_ENUMERATION_MAX_N`` and sampled
    ``DEFAULT_SAMPLE`` at a time above, unless ``budget`` says otherwise.
    Cyclic identities on a polygon that fails the hypothesis produce one
    skipped report per tag.
    """
    selection = set(selection)
    T = build_table(P)
    n = T.n
    if budget is None:
        budget = default_budget(n)
    why = cyclic_hypothesis(T)
    out: list[CheckReport] = []
    if "diamonds" in selection:
        out += _diamonds(P)
    for tag in sorted(selection - {"diamonds"}):
        if why:
            out.append(skipped(tag, {"n": n}, why))
        elif tag == "det3":
            for q in sample(anticlockwise_quads(n), budget, seed):
                out.append(check_det3(T, *q))
                out.append(check_ptolemy_s(T, *q))
        elif tag == "cor-diamonds":
            out += check_cor_diamonds(T)
        elif tag == "chord":
            out.append(check_chord_relation(T, n - 1))
        elif tag == "cor-chord":
            for p in sample(list(valid_cor_chord_params(n)), budget, seed):
                out.append(check_cor_chord(T, *p))
        elif tag == "plane-det":
            if n % 2:
                out.append(skipped("plane-det", {"n": n}, "n is odd"))
            else:
                out += [check_plane_det(T, d) for d in plane_det_degrees(n)]
        elif tag == "main-theorem":
            out.append(check_main_theorem(T))
        elif tag == "oracle":
            out += check_oracle(T)
    return sorted(out, key=CheckReport.sort_key)
