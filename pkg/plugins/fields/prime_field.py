# plugins/fields/prime_field.py
"""
Prime Field Coefficients

Arithmetic modulo a prime P using sympy's GF(P) domain. The modulus comes from
the descriptor `fp:P` and must be prime.

Project: Koszul Toolkit
License: MIT
"""
from typing import Any, Dict, Optional
import logging

from sympy import isprime
from sympy.polys.domains import GF

from algebra.errors import PreconditionError
from plugins.plugin_interface import CoefficientField, parse_config_int


class PrimeField(CoefficientField):
    PLUGIN_META = {
        "plugin_id": "prime",
        "category": "field",
        "status": "stable",
        "api_version": 1,
    }

    def __init__(self, plugin_specific_config: Optional[Dict[str, Any]] = None,
                 main_logger: Optional[logging.Logger] = None):
        super().__init__(plugin_specific_config, main_logger)
        self.modulus = parse_config_int(self.plugin_config, "modulus", 2)
        if not isprime(self.modulus):
            raise PreconditionError(f"Field modulus {self.modulus} is not prime")
        self._domain = GF(self.modulus)

    @property
    def name(self) -> str:
        return "prime"

    @property
    def pretty_name(self) -> str:
        return f"Prime field F_{self.modulus}"

    @property
    def domain(self) -> Any:
        return self._domain

    @property
    def descriptor(self) -> str:
        return f"fp:{self.modulus}"
