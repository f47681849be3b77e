"""Exact identity checks for friezes of cyclic polygons."""

from .alternating import alternating_terms, check_main_theorem, main_s, main_x
from .oracle import (
    ORACLE_RTOL,
    OracleXSL,
    RMonomial,
    check_oracle,
    oracle_delta,
    oracle_L,
    oracle_S,
    oracle_X,
    oracle_XSL,
)
from .relations import (
    anticlockwise_quads,
    check_chord_relation,
    check_cor_chord,
    check_cor_diamond,
    check_cor_diamonds,
    check_det3,
    check_plane_det,
    check_ptolemy_s,
    cor_chord_vertices,
    is_wraparound,
    plane_det_matrix,
    valid_cor_chord_params,
)
from .report import CheckReport, report_from_json
from .runner import TAGS, parse_selection, run_all_checks

__all__ = [
    "CheckReport", "report_from_json", "RMonomial", "OracleXSL", "ORACLE_RTOL",
    "main_x", "main_s", "alternating_terms", "check_main_theorem",
    "check_ptolemy_s", "check_det3", "check_cor_diamond", "check_cor_diamonds",
    "check_chord_relation", "check_cor_chord", "cor_chord_vertices", "is_wraparound",
    "valid_cor_chord_params", "check_plane_det", "plane_det_matrix", "anticlockwise_quads",
    "oracle_delta", "oracle_X", "oracle_S", "oracle_L", "oracle_XSL", "check_oracle",
    "TAGS", "parse_selection", "run_all_checks",
]
