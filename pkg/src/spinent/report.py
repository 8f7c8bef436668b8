"""JSON serialization of :class:`~spinent.measure.MeasureReport`."""

from __future__ import annotations

import json

from . import __version__
from .expectation import MaxExpectation
from .measure import MeasureReport, SiteProfile, SiteResult
from .spin import Direction

_NUM = {"type": "number"}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["input", "dims", "lambda_max", "method", "sites", "gamma", "E", "warnings"],
    "properties": {
        "input": {"type": "string"},
        "dims": {"type": "array", "items": {"type": "integer", "minimum": 2}},
        "lambda_max": {"type": "integer"},
        "method": {"enum": ["analytic", "grid"]},
        "sites": {
            "type": "array",
            "items": {
                "type": "object",
                "required": [
                    "site", "l", "distinct_eigenvalues", "eta", "alpha",
                    "factorable", "max_expectation", "direction",
                ],
                "properties": {
                    "site": {"type": "integer", "minimum": 1},
                    "l": {"type": "integer", "minimum": 1},
                    "distinct_eigenvalues": {"type": "array", "items": {"type": "integer"}},
                    "eta": _NUM,
                    "alpha": {"type": ["number", "null"]},
                    "factorable": {"type": "boolean"},
                    "max_expectation": _NUM,
                    "direction": {
                        "oneOf": [
                            {"type": "null"},
                            {
                                "type": "object",
                                "required": ["theta", "phi"],
                                "properties": {"theta": _NUM, "phi": _NUM},
                                "additionalProperties": False,
                            },
                        ]
                    },
                },
                "additionalProperties": False,
            },
        },
        "gamma": _NUM,
        "E": _NUM,
        "warnings": {"type": "array", "items": {"type": "string"}},
        "version": {"type": "string"},
        "elapsed_seconds": _NUM,
    },
}


def _site_dict(s: SiteResult) -> dict:
    p, mx = s.profile, s.max_expectation
    direction = None
    if mx.direction is not None:
        direction = {"theta": mx.direction.theta, "phi": mx.direction.phi}
    return {
        "site": p.site,
        "l": p.l,
        "distinct_eigenvalues": list(p.distinct_eigenvalues),
        "eta": p.eta,
        "alpha": p.alpha,
        "factorable": p.factorable,
        "max_expectation": mx.value,
        "direction": direction,
    }


def to_document(expr: str, report: MeasureReport, *, elapsed: float | None = None,
                extra_warnings=()) -> dict:
    doc = {
        "input": expr,
        "dims": list(report.dims),
        "lambda_max": report.lambda_max,
        "method": report.method,
        "sites": [_site_dict(s) for s in report.sites],
        "gamma": report.gamma,
        "E": report.E,
        "warnings": list(report.warnings) + list(extra_warnings),
        "version": __version__,
    }
    if elapsed is not None:
        doc["elapsed_seconds"] = elapsed
    return doc


def from_document(doc: dict) -> MeasureReport:
    """Rebuild a report from its JSON document (per-site terms are recomputed)."""
    lam_max = doc["lambda_max"]
    sites = []
    for s in doc["sites"]:
        prof = SiteProfile(
            site=s["site"], l=s["l"], distinct_eigenvalues=tuple(s["distinct_eigenvalues"]),
            eta=s["eta"], alpha=s["alpha"], factorable=s["factorable"],
        )
        d = s["direction"]
        mx = MaxExpectation(
            s["max_expectation"], None if d is None else Direction(d["theta"], d["phi"]), doc["method"]
        )
        term = float(lam_max) if prof.factorable else prof.alpha * abs(mx.value - prof.eta)
        sites.append(SiteResult(prof, mx, term))
    return MeasureReport(
        dims=tuple(doc["dims"]), gamma=doc["gamma"], lambda_max=lam_max, E=doc["E"],
        sites=tuple(sites), method=doc["method"], warnings=tuple(doc["warnings"]),
    )


def dumps(doc: dict, **kwargs) -> str:
    # json writes floats via repr: shortest string that round-trips exactly
    return json.dumps(doc, allow_nan=False, **kwargs)
