# core/input_loader.py
"""
Algebra Input Loader

Parses AlgebraInputFile JSON documents into AlgebraPresentation objects for
the Koszul Toolkit. Malformed documents are refused with InputParseError so
that nothing half-parsed ever reaches the kernels.

Features:
- Quiver from `vertices` and `arrows` (objects or [name, source, target] triples)
- Exact coefficients parsed in the declared field (`rational` or `fp:P`)
- Order kind and ascending arrow priority list
- Monomial shortcut: a relation given as a bare list of arrow ids (or path text)
- CLI overrides for field and order

Project: Koszul Toolkit
License: MIT
"""
from __future__ import annotations

import json
import logging
from typing import Any, Dict, List, Optional

from algebra.errors import AlgebraError, InputParseError, QuiverError
from algebra.freealg import AlgebraElement
from algebra.presentation import AlgebraPresentation
from algebra.quiver import Path, Quiver
from core.constants import DEFAULT_FIELD, DEFAULT_ORDER, SCHEMA_VERSION
from core.plugin_manager import load_field, load_order
from core.serialization import check_schema_version
from plugins.plugin_interface import CoefficientField

logger = logging.getLogger(__name__)


def _parse_path(quiver: Quiver, raw: Any) -> Path:
    if isinstance(raw, str):
        return quiver.parse_path(raw)
    if isinstance(raw, list) and raw and all(isinstance(a, str) for a in raw):
        return quiver.path(*raw)
    raise InputParseError(f"Cannot read path {raw!r}; expected a list of arrow ids or path text")


def _is_monomial_entry(entry: Any) -> bool:
    return isinstance(entry, str) or (isinstance(entry, list) and bool(entry) and all(isinstance(a, str) for a in entry))


def _parse_relation(quiver: Quiver, field: CoefficientField, entry: Any) -> AlgebraElement:
    domain = field.domain
    if _is_monomial_entry(entry):
        return AlgebraElement.from_path(_parse_path(quiver, entry), domain)
    if not isinstance(entry, list) or not entry:
        raise InputParseError(f"Relation {entry!r} must be a non-empty list of terms or a path")
    element = AlgebraElement.zero(quiver, domain)
    for term in entry:
        if not isinstance(term, dict) or "path" not in term:
            raise InputParseError(f"Term {term!r} must be an object with 'coeff' and 'path'")
        coeff = field.parse(term.get("coeff", "1"))
        element = element + AlgebraElement.from_path(_parse_path(quiver, term["path"]), domain, coeff)
    return element


def presentation_from_dict(payload: Dict[str, Any], field_override: Optional[str] = None,
                           order_override: Optional[str] = None, default_field: str = DEFAULT_FIELD,
                           default_order: str = DEFAULT_ORDER) -> AlgebraPresentation:
    """
    Build a presentation from a decoded AlgebraInputFile.

    Raises:
        InputParseError: missing keys, malformed quiver or unparseable terms.
        PreconditionError: unknown order/field names.
    """
    if not isinstance(payload, dict):
        raise InputParseError("Algebra input must be a JSON object")
    check_schema_version(payload)
    if "vertices" not in payload or "arrows" not in payload:
        raise InputParseError("Algebra input needs 'vertices' and 'arrows'")
    try:
        quiver = Quiver(payload["vertices"], payload["arrows"])
    except AlgebraError as e:
        raise InputParseError(f"Invalid quiver: {e}")

    field = load_field(field_override or payload.get("field") or default_field)
    order_spec = payload.get("order") or {}
    if isinstance(order_spec, str):
        order_spec = {"kind": order_spec}
    kind = order_override or order_spec.get("kind") or default_order
    try:
        order = load_order(kind, quiver, order_spec.get("priority"))
    except QuiverError as e:
        raise InputParseError(f"Invalid order priority: {e}")

    relations: List[AlgebraElement] = []
    for i, entry in enumerate(payload.get("relations") or []):
        try:
            relations.append(_parse_relation(quiver, field, entry))
        except InputParseError:
            raise
        except AlgebraError as e:
            raise InputParseError(f"Relation {i}: {e}")
    presentation = AlgebraPresentation(quiver, field, order, relations, str(payload.get("name", "")))
    logger.debug(f"Loaded {presentation.name or 'algebra'}: {quiver!r}, {len(relations)} relations")
    return presentation


def load_presentation(path: str, field_override: Optional[str] = None,
                      order_override: Optional[str] = None, default_field: str = DEFAULT_FIELD,
                      default_order: str = DEFAULT_ORDER) -> AlgebraPresentation:
    try:
        with open(path, "r", encoding="utf-8-sig") as f:
            payload = json.load(f)
    except json.JSONDecodeError as e:
        raise InputParseError(f"{path} is not valid JSON: {e}")
    except OSError as e:
        raise InputParseError(f"Cannot read {path}: {e}")
    return presentation_from_dict(payload, field_override, order_override, default_field, default_order)


def presentation_to_dict(presentation: AlgebraPresentation) -> Dict[str, Any]:
    """AlgebraInputFile for a presentation; monomial relations use the shortcut."""
    quiver = presentation.quiver
    relations: List[Any] = []
    for r in presentation.relations:
        paths = presentation.order.descending(r.support)
        if len(paths) == 1 and r.coefficient(paths[0]) == presentation.domain.one:
            relations.append(paths[0].arrow_names)
        else:
            relations.append([{"coeff": presentation.field.format(r.coefficient(p)), "path": p.arrow_names}
                              for p in paths])
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "algebra",
        "name": presentation.name,
        "field": presentation.field.descriptor,
        "vertices": list(quiver.vertices),
        "arrows": [{"name": a.name, "source": quiver.vertices[a.source], "target": quiver.vertices[a.target]}
                   for a in quiver.arrows],
        "order": presentation.order.descriptor(),
        "relations": relations,
    }
