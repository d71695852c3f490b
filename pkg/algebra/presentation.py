# algebra/presentation.py
"""Quiver, field, order and relations describing one algebra KΓ/I."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List

from algebra.freealg import AlgebraElement
from algebra.quiver import Quiver
from plugins.plugin_interface import AdmissibleOrder, CoefficientField


@dataclass
class AlgebraPresentation:
    quiver: Quiver
    field: CoefficientField
    order: AdmissibleOrder
    relations: List[AlgebraElement] = field(default_factory=list)
    name: str = ""

    @property
    def domain(self) -> Any:
        return self.field.domain

    @property
    def is_monomial_input(self) -> bool:
        return all(len(r) == 1 for r in self.relations)

    def descriptor(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "field": self.field.descriptor,
            "order": self.order.descriptor(),
            "vertices": len(self.quiver.vertices),
            "arrows": len(self.quiver.arrows),
            "relations": len(self.relations),
        }
