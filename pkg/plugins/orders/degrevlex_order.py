# plugins/orders/degrevlex_order.py
"""
Length-Reverse-Lexicographic Order

Length first; equal-length paths are compared from the right end, so the last
differing arrow decides by priority. Like deglex it is compatible with
concatenation on both sides.

Project: Koszul Toolkit
License: MIT
"""
from typing import Tuple

from algebra.quiver import Path
from plugins.plugin_interface import AdmissibleOrder


class DegrevlexOrder(AdmissibleOrder):
    PLUGIN_META = {
        "plugin_id": "degrevlex",
        "category": "order",
        "status": "stable",
        "api_version": 1,
    }

    @property
    def name(self) -> str:
        return "degrevlex"

    @property
    def pretty_name(self) -> str:
        return "Length-lexicographic (right to left)"

    def sort_key(self, path: Path) -> Tuple:
        if not path.word:
            return (0, (), path.vertex)
        rank = self.rank
        return (len(path.word), tuple(rank[a] for a in reversed(path.word)), -1)
