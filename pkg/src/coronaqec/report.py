"""JSON serialisation of reports. Floats are written with 15 significant digits."""

from __future__ import annotations

import dataclasses
import json
import math

import numpy as np

SCHEMA_VERSION = 1


def _round(x: float):
    if math.isnan(x) or math.isinf(x):
        return None
    return float(f"{x:.15g}")


def to_plain(obj):
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_plain(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [to_plain(v) for v in obj.tolist()]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return _round(float(obj))
    return obj


def dumps(obj) -> str:
    return json.dumps(to_plain(obj), indent=2, sort_keys=True, allow_nan=False) + "\n"


def corona_report_dict(report) -> dict:
    d = to_plain(report)
    d["schema"] = f"coronaqec.corona/{SCHEMA_VERSION}"
    err = report.formula_error
    d["formula_error"] = None if err is None else _round(err)
    d["formula_matches"] = None if err is None else bool(err <= report.tolerances.qec_match_tol)
    d["sandwich_ok"] = bool(report.delta2 <= report.qec_direct + 1e-9 and report.qec_direct < report.delta1)
    return d
