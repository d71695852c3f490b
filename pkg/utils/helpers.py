# utils/helpers.py
"""
Shared Helper Utilities

Common verdict constants and small formatting helpers used across the
algebra kernels, services and the CLI of the Koszul Toolkit.

Features:
- Verdict status constants (yes, no, inconclusive, out of scope)
- Witness / path formatting helpers for text rendering
- Duration formatting for timing fields

Project: Koszul Toolkit
License: MIT
"""

import logging
from typing import Any, Iterable, Optional

logger = logging.getLogger(__name__)

# --- Verdict Status Constants ---
VERDICT_YES = "yes"
VERDICT_NO = "no"
VERDICT_INCONCLUSIVE = "inconclusive"
VERDICT_OUT_OF_SCOPE = "out_of_scope"
VERDICT_STATUSES = (VERDICT_YES, VERDICT_NO, VERDICT_INCONCLUSIVE, VERDICT_OUT_OF_SCOPE)

STATUS_NA = "N/A"

# --- Mode Constants ---
MODE_STRICT = "strict"
MODE_WEAK = "weak"


def format_value(value: Any) -> str:
    """Render report values for text output; None becomes N/A."""
    if value is None:
        return STATUS_NA
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return ", ".join(format_value(v) for v in value) or "-"
    return str(value)


def format_duration(milliseconds: Optional[float]) -> str:
    if not isinstance(milliseconds, (int, float)) or milliseconds < 0:
        return STATUS_NA
    if milliseconds < 1000:
        return f"{milliseconds:.1f} ms"
    return f"{milliseconds / 1000:.2f} s"


def format_verdict(status: str, exact: bool, bound: Optional[int]) -> str:
    if status == VERDICT_YES and not exact and bound is not None:
        return f"yes (n <= {bound})"
    if status == VERDICT_INCONCLUSIVE and bound is not None:
        return f"inconclusive (bound {bound})"
    return status


def join_words(words: Iterable[Any], limit: int = 8) -> str:
    """Comma-separated words, abbreviated after `limit` entries."""
    items = [str(w) for w in words]
    if len(items) > limit:
        return ", ".join(items[:limit]) + f", ... (+{len(items) - limit})"
    return ", ".join(items)
