# plugins/fields/rational_field.py
"""
Rational Coefficients

Exact arithmetic over the rationals using sympy's QQ domain.

Project: Koszul Toolkit
License: MIT
"""
from typing import Any

from sympy.polys.domains import QQ

from plugins.plugin_interface import CoefficientField


class RationalField(CoefficientField):
    PLUGIN_META = {
        "plugin_id": "rational",
        "category": "field",
        "status": "stable",
        "api_version": 1,
    }

    @property
    def name(self) -> str:
        return "rational"

    @property
    def pretty_name(self) -> str:
        return "Rational numbers"

    @property
    def domain(self) -> Any:
        return QQ

    @property
    def descriptor(self) -> str:
        return "rational"
