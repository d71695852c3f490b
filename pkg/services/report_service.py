# services/report_service.py
"""
Report Rendering Service

Renders Groebner bases, chain tables, Betti tables and Koszul reports as JSON
or plain text and writes them to stdout or a file. Text output is derived
from the same payloads as JSON and is never parsed back.

Features:
- JSON rendering through core.serialization (timing optional)
- Compact text tables for Betti data and chain levels
- Verdict lines with bounds, criteria and the first witnesses
- Output to a file path or stdout

Project: Koszul Toolkit
License: MIT
"""
from __future__ import annotations

import logging
import sys
from typing import Any, Dict, List, Optional

from algebra.chains import ChainTable
from algebra.groebner import GroebnerBasis
from algebra.koszul import KoszulReport, Verdict
from algebra.resolution import BettiTable
from core.app_state import AppState
from core.serialization import (
    betti_to_dict,
    chains_to_dict,
    dumps,
    groebner_to_dict,
    report_to_dict,
)
from utils.helpers import format_duration, format_value, format_verdict, join_words

logger = logging.getLogger(__name__)

MAX_TEXT_WITNESSES = 3


class ReportService:
    """Turns computation results into the configured output format."""

    def __init__(self, app_state: AppState):
        self.app_state = app_state
        self.output_format = app_state.output_format

    # --- text renderers ---

    def groebner_text(self, basis: GroebnerBasis) -> str:
        lines = [f"Groebner basis: {len(basis)} element(s), valid to degree {basis.valid_to_degree}, "
                 f"complete={format_value(basis.complete)}"]
        for g in basis.elements:
            lines.append(f"  [{g.degree}] {g.format(basis.order)}")
        return "\n".join(lines)

    def chains_text(self, table: ChainTable) -> str:
        lines = [f"Chains for {join_words(table.rho, limit=12)} (n <= {table.n_max})"]
        for n in range(table.n_max + 1):
            level = table.level(n)
            lines.append(f"  AP({n}) [{len(level)}]: {join_words((f'{c}({c.length})' for c in level), limit=10)}")
        if table.capped:
            lines.append(f"  (words longer than {table.max_length} omitted)")
        return "\n".join(lines)

    def betti_text(self, table: BettiTable) -> str:
        lines = [f"Betti table ({table.method}, degree bound {format_value(table.max_degree)})"]
        for row in table.rows:
            cells = ", ".join(f"{v}:{d}x{m}" for (v, d), m in sorted(row.entries.items())) or "-"
            flag = "  (truncated)" if row.truncated else ""
            lines.append(f"  n={row.n}: {cells}{flag}")
        return "\n".join(lines)

    def _verdict_lines(self, name: str, verdict: Verdict) -> List[str]:
        head = f"  {name:<24} {format_verdict(verdict.status, verdict.exact, verdict.bound)}"
        if verdict.exact and verdict.status in ("yes", "no"):
            head += " [exact]"
        lines = [head]
        if verdict.criteria:
            lines.append(f"      by: {'; '.join(verdict.criteria)}")
        for w in verdict.witnesses[:MAX_TEXT_WITNESSES]:
            lines.append(f"      witness: {', '.join(f'{k}={v}' for k, v in w.items())}")
        if len(verdict.witnesses) > MAX_TEXT_WITNESSES:
            lines.append(f"      ... {len(verdict.witnesses) - MAX_TEXT_WITNESSES} more witness(es)")
        if verdict.note:
            lines.append(f"      note: {verdict.note}")
        return lines

    def report_text(self, report: KoszulReport) -> str:
        gb = report.groebner
        lines = [
            f"Koszul report: {report.input.get('name') or 'algebra'}",
            f"  field {report.input.get('field')}, order {report.input.get('order', {}).get('kind')}, "
            f"bounds D={report.bounds.get('max_degree')} N={report.bounds.get('max_n')}",
            f"  Groebner basis: {gb.get('size')} element(s) in degrees {format_value(gb.get('degrees'))}, "
            f"complete={format_value(gb.get('complete'))}, monomial={format_value(gb.get('monomial'))}",
            "Verdicts:",
        ]
        for name, verdict in report.verdicts.items():
            lines.extend(self._verdict_lines(name, verdict))
        lines.extend(self._verdict_lines("ags_minimal", report.ags_minimal))
        for spec, checks in report.f_checks.items():
            lines.append(f"F = {spec}:")
            for name, verdict in checks.items():
                lines.extend(self._verdict_lines(name, verdict))
        lines.append(f"Global dimension bound: {format_value(report.global_dimension_bound)}")
        for note in report.notes:
            lines.append(f"  * {note}")
        if report.timing:
            lines.append("Timing: " + ", ".join(f"{k}={format_duration(v)}" for k, v in report.timing.items()))
        return "\n".join(lines)

    # --- dispatch ---

    def render(self, obj: Any) -> str:
        as_text = self.output_format == "text"
        if isinstance(obj, KoszulReport):
            return self.report_text(obj) if as_text else dumps(report_to_dict(obj))
        if isinstance(obj, GroebnerBasis):
            return self.groebner_text(obj) if as_text else dumps(groebner_to_dict(obj))
        if isinstance(obj, ChainTable):
            return self.chains_text(obj) if as_text else dumps(chains_to_dict(obj))
        if isinstance(obj, BettiTable):
            return self.betti_text(obj) if as_text else dumps(betti_to_dict(obj))
        if isinstance(obj, dict):
            return dumps(obj)
        return str(obj)

    def emit(self, obj: Any, out_path: Optional[str] = None) -> str:
        text = self.render(obj)
        self.write(text, out_path)
        return text

    @staticmethod
    def write(text: str, out_path: Optional[str] = None) -> None:
        if out_path:
            with open(out_path, "w", encoding="utf-8", newline="\n") as f:
                f.write(text)
                if not text.endswith("\n"):
                    f.write("\n")
            logger.info(f"Wrote {out_path}")
        else:
            sys.stdout.write(text if text.endswith("\n") else text + "\n")
            sys.stdout.flush()
