# core/plugin_manager.py
"""
Plugin Manager

Resolves order names and field descriptors to plugin instances for the
Koszul Toolkit.

Features:
- Dynamic plugin instantiation through the plugin catalog
- Field descriptor parsing (`rational`, `fp:P`)
- Order construction bound to a quiver and an arrow priority list

Project: Koszul Toolkit
License: MIT
"""

import logging
from typing import Optional, Sequence

from algebra.errors import PreconditionError
from algebra.quiver import Quiver
from core.plugin_catalog import find_plugin, plugin_ids
from plugins.plugin_interface import AdmissibleOrder, CoefficientField

logger = logging.getLogger(__name__)


def load_order(name: str, quiver: Quiver, priority: Optional[Sequence[str]] = None) -> AdmissibleOrder:
    """
    Instantiates the admissible order registered under `name`.

    Raises:
        PreconditionError: if no catalogued order has that plugin_id.
    """
    cls = find_plugin("order", str(name).strip().lower())
    if cls is None:
        raise PreconditionError(f"Unknown order '{name}'. Known orders: {', '.join(plugin_ids('order'))}")
    order = cls(quiver, priority, main_logger=logger)
    logger.debug(f"Loaded order {order.pretty_name} with priority {list(order.priority)}")
    return order


def load_field(descriptor: str) -> CoefficientField:
    """
    Instantiates the coefficient field for a descriptor: `rational` or `fp:P`.

    Raises:
        PreconditionError: unknown descriptor or composite modulus.
    """
    text = str(descriptor).strip().lower()
    if text in ("rational", "qq"):
        cls, config = find_plugin("field", "rational"), {}
    elif text.startswith("fp:"):
        modulus = text[3:].strip()
        if not modulus.isdigit():
            raise PreconditionError(f"Field descriptor '{descriptor}' needs an integer modulus")
        cls, config = find_plugin("field", "prime"), {"modulus": modulus}
    else:
        raise PreconditionError(f"Unknown field '{descriptor}'. Use rational or fp:P.")
    if cls is None:
        raise PreconditionError(f"Field plugin for '{descriptor}' could not be imported")
    return cls(config, main_logger=logger)
