# core/serialization.py
"""
JSON Serialization

Writers and readers for every payload the Koszul Toolkit emits: Groebner
bases, chain tables, Betti tables and Koszul reports. Each payload carries a
`schema_version` and a `kind`; readers refuse payloads from a newer major
schema. parse(serialize(x)) == x for all four kinds.

Features:
- Quiver, path and coefficient encoding shared by all payloads
- Field descriptors recovered from the sympy domain (`rational`, `fp:P`)
- Schema version checks with packaging.version
- Report timing kept in its own field, outside report equality

Project: Koszul Toolkit
License: MIT
"""
from __future__ import annotations

import json
import logging
from collections import Counter
from typing import Any, Dict, List, Optional

from packaging.version import InvalidVersion, Version

from algebra.chains import Chain, ChainTable
from algebra.errors import AlgebraError, InputParseError, SchemaVersionError
from algebra.freealg import AlgebraElement
from algebra.groebner import GroebnerBasis, TipSet
from algebra.koszul import KoszulReport, Verdict
from algebra.quiver import Path, Quiver
from algebra.resolution import BettiRow, BettiTable
from core.constants import SCHEMA_VERSION
from core.plugin_manager import load_field, load_order
from plugins.plugin_interface import ReportKeys
from utils.helpers import VERDICT_STATUSES

logger = logging.getLogger(__name__)

KIND_GROEBNER = "groebner_basis"
KIND_CHAINS = "chain_table"
KIND_BETTI = "betti_table"
KIND_REPORT = "koszul_report"


def check_schema_version(payload: Dict[str, Any]) -> None:
    """Accept a missing version (current assumed) or any version of the current major."""
    raw = payload.get(ReportKeys.SCHEMA_VERSION)
    if raw is None:
        return
    try:
        version = Version(str(raw))
    except InvalidVersion:
        raise SchemaVersionError(f"Unreadable schema_version {raw!r}")
    if version.major > Version(SCHEMA_VERSION).major:
        raise SchemaVersionError(f"schema_version {raw} is newer than supported {SCHEMA_VERSION}")


def _expect_kind(payload: Dict[str, Any], kind: str) -> None:
    if not isinstance(payload, dict):
        raise InputParseError(f"Expected a JSON object of kind {kind}")
    check_schema_version(payload)
    found = payload.get(ReportKeys.KIND)
    if found != kind:
        raise InputParseError(f"Expected kind {kind!r}, found {found!r}")


def _header(kind: str) -> Dict[str, Any]:
    return {ReportKeys.SCHEMA_VERSION: SCHEMA_VERSION, ReportKeys.KIND: kind}


def dumps(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False)


def loads(text: str) -> Dict[str, Any]:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputParseError(f"Invalid JSON: {e}")


# --- shared pieces ---

def field_descriptor(domain: Any) -> str:
    characteristic = domain.characteristic()
    return "rational" if characteristic == 0 else f"fp:{characteristic}"


def quiver_to_dict(quiver: Quiver) -> Dict[str, Any]:
    return {
        "vertices": list(quiver.vertices),
        "arrows": [{"name": a.name, "source": quiver.vertices[a.source], "target": quiver.vertices[a.target]}
                   for a in quiver.arrows],
    }


def quiver_from_dict(payload: Dict[str, Any]) -> Quiver:
    try:
        return Quiver(payload["vertices"], payload["arrows"])
    except (KeyError, TypeError, AlgebraError) as e:
        raise InputParseError(f"Invalid quiver: {e}")


def path_to_json(path: Path) -> Any:
    if not path.word:
        return {"vertex": path.source_name}
    return path.arrow_names


def path_from_json(quiver: Quiver, raw: Any) -> Path:
    try:
        if isinstance(raw, dict):
            return quiver.vertex_path(raw["vertex"])
        return quiver.path(*raw)
    except (KeyError, TypeError, AlgebraError) as e:
        raise InputParseError(f"Invalid path {raw!r}: {e}")


def _tips_to_json(rho: TipSet) -> List[Any]:
    return [path_to_json(p) for p in rho]


def _tips_from_json(quiver: Quiver, raw: List[Any]) -> TipSet:
    return TipSet(quiver, [path_from_json(quiver, p) for p in raw])


# --- Groebner basis ---

def groebner_to_dict(basis: GroebnerBasis) -> Dict[str, Any]:
    domain = basis.domain
    elements = []
    for g in basis.elements:
        elements.append([
            {"coeff": str(domain.to_sympy(g.coefficient(p))), "path": path_to_json(p)}
            for p in basis.order.descending(g.support)
        ])
    payload = _header(KIND_GROEBNER)
    payload.update({
        "quiver": quiver_to_dict(basis.quiver),
        "field": field_descriptor(domain),
        "order": basis.order.descriptor(),
        "valid_to_degree": basis.valid_to_degree,
        "complete": basis.complete,
        "tips": [path_to_json(t) for t in basis.tips],
        "elements": elements,
    })
    return payload


def groebner_from_dict(payload: Dict[str, Any]) -> GroebnerBasis:
    _expect_kind(payload, KIND_GROEBNER)
    quiver = quiver_from_dict(payload.get("quiver", {}))
    field = load_field(payload.get("field", "rational"))
    order_spec = payload.get("order") or {}
    order = load_order(order_spec.get("kind", "deglex"), quiver, order_spec.get("priority"))
    elements = []
    for terms in payload.get("elements", []):
        element = AlgebraElement.zero(quiver, field.domain)
        for term in terms:
            element = element + AlgebraElement.from_path(
                path_from_json(quiver, term["path"]), field.domain, field.parse(term["coeff"]))
        elements.append(element)
    return GroebnerBasis(quiver, field.domain, order, tuple(elements),
                         int(payload["valid_to_degree"]), bool(payload["complete"]))


# --- chain tables ---

def chains_to_dict(table: ChainTable) -> Dict[str, Any]:
    levels = []
    for n in range(table.n_max + 1):
        previous = {c.word: i for i, c in enumerate(table.level(n - 1))} if n else {}
        levels.append([
            {
                "word": path_to_json(c.word),
                "length": c.length,
                "prefix": path_to_json(c.prefix) if c.prefix is not None else None,
                "parent": previous[c.parent.word] if c.parent is not None else None,
                "head": path_to_json(c.head) if c.head is not None else None,
            }
            for c in table.level(n)
        ])
    payload = _header(KIND_CHAINS)
    payload.update({
        "quiver": quiver_to_dict(table.quiver),
        "rho": _tips_to_json(table.rho),
        "n_max": table.n_max,
        "max_length": table.max_length,
        "capped": table.capped,
        "levels": levels,
    })
    return payload


def chains_from_dict(payload: Dict[str, Any]) -> ChainTable:
    _expect_kind(payload, KIND_CHAINS)
    quiver = quiver_from_dict(payload.get("quiver", {}))
    rho = _tips_from_json(quiver, payload.get("rho", []))
    levels: Dict[int, List[Chain]] = {}
    for n, entries in enumerate(payload.get("levels", [])):
        built = []
        for entry in entries:
            parent = levels[n - 1][entry["parent"]] if entry.get("parent") is not None else None
            prefix = path_from_json(quiver, entry["prefix"]) if entry.get("prefix") is not None else None
            head = path_from_json(quiver, entry["head"]) if entry.get("head") is not None else None
            built.append(Chain(path_from_json(quiver, entry["word"]), n, prefix, parent, head))
        levels[n] = built
    return ChainTable(rho, int(payload["n_max"]), levels, payload.get("max_length"), bool(payload.get("capped")))


# --- Betti tables ---

def betti_to_dict(table: BettiTable) -> Dict[str, Any]:
    payload = _header(KIND_BETTI)
    payload.update({
        "method": table.method,
        "max_degree": table.max_degree,
        "rows": [
            {
                "n": row.n,
                "truncated": row.truncated,
                "entries": [{"vertex": v, "degree": d, "count": m} for (v, d), m in sorted(row.entries.items())],
            }
            for row in table.rows
        ],
    })
    return payload


def betti_from_dict(payload: Dict[str, Any]) -> BettiTable:
    _expect_kind(payload, KIND_BETTI)
    rows = []
    for raw in payload.get("rows", []):
        entries = Counter({(e["vertex"], int(e["degree"])): int(e["count"]) for e in raw.get("entries", [])})
        rows.append(BettiRow(int(raw["n"]), entries, bool(raw.get("truncated", False))))
    return BettiTable(payload.get("method", ""), payload.get("max_degree"), rows)


# --- reports ---

def verdict_to_dict(verdict: Verdict) -> Dict[str, Any]:
    return {
        ReportKeys.STATUS: verdict.status,
        ReportKeys.EXACT: verdict.exact,
        ReportKeys.BOUND: verdict.bound,
        ReportKeys.WITNESSES: verdict.witnesses,
        ReportKeys.CRITERIA: verdict.criteria,
        ReportKeys.NOTE: verdict.note,
        "evidence": verdict.evidence,
    }


def verdict_from_dict(payload: Dict[str, Any]) -> Verdict:
    if payload.get(ReportKeys.STATUS) not in VERDICT_STATUSES:
        raise InputParseError(f"Unknown verdict status {payload.get(ReportKeys.STATUS)!r}")
    return Verdict(
        status=payload[ReportKeys.STATUS],
        exact=bool(payload.get(ReportKeys.EXACT, True)),
        bound=payload.get(ReportKeys.BOUND),
        witnesses=list(payload.get(ReportKeys.WITNESSES, [])),
        criteria=list(payload.get(ReportKeys.CRITERIA, [])),
        note=payload.get(ReportKeys.NOTE, ""),
        evidence=dict(payload.get("evidence", {})),
    )


def report_to_dict(report: KoszulReport, include_timing: bool = True) -> Dict[str, Any]:
    payload = _header(KIND_REPORT)
    payload.update({
        ReportKeys.INPUT: report.input,
        ReportKeys.BOUNDS: report.bounds,
        ReportKeys.GROEBNER: report.groebner,
        ReportKeys.VERDICTS: {k: verdict_to_dict(v) for k, v in report.verdicts.items()},
        ReportKeys.F_CHECKS: {spec: {k: verdict_to_dict(v) for k, v in checks.items()}
                              for spec, checks in report.f_checks.items()},
        ReportKeys.AGS_MINIMAL: verdict_to_dict(report.ags_minimal),
        ReportKeys.GLOBAL_DIMENSION: report.global_dimension_bound,
        ReportKeys.NOTES: report.notes,
    })
    if include_timing:
        payload[ReportKeys.TIMING] = report.timing
    return payload


def report_from_dict(payload: Dict[str, Any]) -> KoszulReport:
    _expect_kind(payload, KIND_REPORT)
    try:
        return KoszulReport(
            input=payload[ReportKeys.INPUT],
            bounds=payload[ReportKeys.BOUNDS],
            groebner=payload[ReportKeys.GROEBNER],
            verdicts={k: verdict_from_dict(v) for k, v in payload[ReportKeys.VERDICTS].items()},
            f_checks={spec: {k: verdict_from_dict(v) for k, v in checks.items()}
                      for spec, checks in payload.get(ReportKeys.F_CHECKS, {}).items()},
            ags_minimal=verdict_from_dict(payload[ReportKeys.AGS_MINIMAL]),
            global_dimension_bound=payload.get(ReportKeys.GLOBAL_DIMENSION),
            notes=list(payload.get(ReportKeys.NOTES, [])),
            timing=dict(payload.get(ReportKeys.TIMING, {})),
        )
    except KeyError as e:
        raise InputParseError(f"Report is missing field {e}")


def parse_payload(payload: Dict[str, Any]) -> Optional[Any]:
    """Dispatch on `kind`; None for kinds this module does not own."""
    readers = {
        KIND_GROEBNER: groebner_from_dict,
        KIND_CHAINS: chains_from_dict,
        KIND_BETTI: betti_from_dict,
        KIND_REPORT: report_from_dict,
    }
    reader = readers.get(payload.get(ReportKeys.KIND)) if isinstance(payload, dict) else None
    return reader(payload) if reader else None
