"""Weight distributions of trace codes over GF(p^phi(2 l^m))."""

import json

from ._tracecode import (
    Field,
    FieldParams,
    TracecodeError,
    classify_j,
    predict,
    s_binomial_closed,
    s_single_closed,
    secret_sharing_check,
    sphere_packing_optimal,
    trace_of_xi_power,
    validate_params,
    w_closed,
    y_count_closed,
)
from ._tracecode import code_report_json as _code_report_json

__all__ = [
    "Field",
    "FieldParams",
    "TracecodeError",
    "classify_j",
    "code_report",
    "predict",
    "s_binomial_closed",
    "s_single_closed",
    "secret_sharing_check",
    "sphere_packing_optimal",
    "trace_of_xi_power",
    "validate_params",
    "w_closed",
    "y_count_closed",
]


def code_report(p, ell, m, alpha, beta_index=None, mode="both", threads=1):
    """Report for C_{alpha,beta} with beta = g^beta_index (or 0), as a dict."""
    return json.loads(_code_report_json(p, ell, m, alpha, beta_index, mode, threads))
