# plugins/orders/deglex_order.py
"""
Length-Lexicographic Order

Paths are compared by length first; equal-length paths are compared arrow by
arrow from the left, the first differing arrow deciding by priority. Trivial
paths are ordered by vertex declaration.

Project: Koszul Toolkit
License: MIT
"""
from typing import Tuple

from algebra.quiver import Path
from plugins.plugin_interface import AdmissibleOrder


class DeglexOrder(AdmissibleOrder):
    PLUGIN_META = {
        "plugin_id": "deglex",
        "category": "order",
        "status": "stable",
        "api_version": 1,
    }

    @property
    def name(self) -> str:
        return "deglex"

    @property
    def pretty_name(self) -> str:
        return "Length-lexicographic (left to right)"

    def sort_key(self, path: Path) -> Tuple:
        if not path.word:
            return (0, (), path.vertex)
        rank = self.rank
        return (len(path.word), tuple(rank[a] for a in path.word), -1)
