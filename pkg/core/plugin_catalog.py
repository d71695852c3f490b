# core/plugin_catalog.py
"""
Plugin Catalog

Registry of the admissible orders and coefficient fields the Koszul Toolkit
ships, used by the plugin manager, the config validator and the offline
plugin validator.

Features:
- Explicit registry of plugin modules per category with display labels
- PLUGIN_META read from the imported class; a module that fails to import is
  reported as unloadable instead of breaking the whole catalog
- Lookup by short name (`deglex`, `prime`, ...) within a category

Project: Koszul Toolkit
License: MIT
"""
from __future__ import annotations

import importlib
import inspect
import logging
from functools import lru_cache
from typing import Any, Dict, List, Optional, Tuple, Type

from plugins.plugin_interface import AdmissibleOrder, AlgebraPlugin, CoefficientField

logger = logging.getLogger(__name__)

# category -> (package under plugins/, base class every plugin there derives from)
CATEGORIES: Dict[str, Tuple[str, Type[AlgebraPlugin]]] = {
    "order": ("orders", AdmissibleOrder),
    "field": ("fields", CoefficientField),
}

# Keep in sync when adding plugins.
KNOWN_PLUGINS: List[Dict[str, str]] = [
    {"category": "order", "module": "deglex_order", "label": "Length-lexicographic (left to right)"},
    {"category": "order", "module": "degrevlex_order", "label": "Length-lexicographic (right to left)"},
    {"category": "field", "module": "rational_field", "label": "Rational numbers"},
    {"category": "field", "module": "prime_field", "label": "Prime field fp:P"},
]


@lru_cache(maxsize=None)
def _plugin_class(category: str, module: str) -> Optional[Type[AlgebraPlugin]]:
    package, base = CATEGORIES[category]
    try:
        mod = importlib.import_module(f"plugins.{package}.{module}")
    except ImportError as e:
        logger.warning("Plugin module plugins.%s.%s cannot be imported: %s", package, module, e)
        return None
    found = [obj for _, obj in inspect.getmembers(mod, inspect.isclass)
             if issubclass(obj, base) and obj.__module__ == mod.__name__ and not inspect.isabstract(obj)]
    if len(found) != 1:
        logger.warning("plugins.%s.%s defines %d concrete %s classes, expected 1",
                       package, module, len(found), base.__name__)
        return None
    return found[0]


def list_plugins(category: Optional[str] = None, include_unloadable: bool = False) -> List[Dict[str, Any]]:
    """
    Catalog entries, optionally restricted to one category ('order' or 'field').

    Each entry has `plugin_type` (`orders.deglex_order`, ...), `category`,
    `label`, `meta` and `loadable`; loadable entries also carry `class`.
    """
    out: List[Dict[str, Any]] = []
    for entry in KNOWN_PLUGINS:
        if category is not None and entry["category"] != category:
            continue
        package = CATEGORIES[entry["category"]][0]
        item: Dict[str, Any] = {
            "plugin_type": f"{package}.{entry['module']}",
            "category": entry["category"],
            "label": entry["label"],
        }
        cls = _plugin_class(entry["category"], entry["module"])
        if cls is None:
            if include_unloadable:
                out.append({**item, "meta": {"status": "unavailable"}, "loadable": False})
            continue
        out.append({**item, "meta": cls.get_plugin_meta(), "class": cls, "loadable": True})
    return out


def find_plugin(category: str, plugin_id: str) -> Optional[Type[AlgebraPlugin]]:
    """Class whose PLUGIN_META plugin_id matches, within one category."""
    return next((e["class"] for e in list_plugins(category) if e["meta"].get("plugin_id") == plugin_id), None)


def plugin_ids(category: str) -> List[str]:
    return [e["meta"].get("plugin_id") for e in list_plugins(category)]
