# plugins/plugin_interface.py
"""
Plugin Interface and Report Keys

This module defines the abstract plugin interfaces used by the Koszul Toolkit:
admissible orders on quiver paths and exact coefficient fields. It also holds
a configuration parsing helper and ReportKeys, the stable field names of the
JSON report.

Features:
- AlgebraPlugin base (PLUGIN_META capability metadata, name / pretty_name)
- AdmissibleOrder ABC (sort keys, comparison, tip selection helpers)
- CoefficientField ABC (sympy domain, exact parse/format of scalars)
- parse_config_int with inline-comment support
- ReportKeys unified naming for serialized reports

Supported Consumers:
- All plugins under plugins/orders/ and plugins/fields/
- core/plugin_manager.py, core/plugin_catalog.py and tests/validate_all_plugins.py

Project: Koszul Toolkit
License: MIT
"""

from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, TYPE_CHECKING
import logging

from sympy.polys.polyerrors import NotInvertible

from algebra.errors import InputParseError, QuiverError

if TYPE_CHECKING:
    from algebra.quiver import Path, Quiver


def parse_config_int(config_dict: Dict[str, Any], key: str, default: int) -> int:
    """
    Parse an integer configuration value, handling comments and whitespace.

    Example:
        # Handles values like "7 ; modulus" or "7"
        modulus = parse_config_int(config, "modulus", 2)
    """
    value_str = str(config_dict.get(key, default))
    clean_value = value_str.split(';')[0].strip()
    return int(clean_value)


class ReportKeys:
    """
    Stable field names of the serialized KoszulReport.

    Parsers and renderers refer to these constants so the JSON schema does not
    drift between the writer and the reader.
    """
    SCHEMA_VERSION = "schema_version"
    KIND = "kind"
    INPUT = "input"
    BOUNDS = "bounds"
    GROEBNER = "groebner"
    VERDICTS = "verdicts"
    F_CHECKS = "f_checks"
    AGS_MINIMAL = "ags_minimal"
    GLOBAL_DIMENSION = "global_dimension_bound"
    NOTES = "notes"
    TIMING = "timing"

    D_KOSZUL = "d_koszul"
    TWO_D_DETERMINED = "two_d_determined"
    EXT_GENERATED_012 = "ext_generated_012"
    TWO_D_KOSZUL = "two_d_koszul"
    MONOMIAL_TWO_D_KOSZUL = "monomial_two_d_koszul"

    STATUS = "status"
    EXACT = "exact"
    BOUND = "bound"
    WITNESSES = "witnesses"
    CRITERIA = "criteria"
    NOTE = "note"


class AlgebraPlugin(ABC):
    """
    Base class of every catalogued plugin.

    Plugins are instantiated by core/plugin_manager.py from a short name or a
    descriptor string; `plugin_config` carries descriptor parameters.
    """

    def __init__(self, plugin_specific_config: Optional[Dict[str, Any]] = None,
                 main_logger: Optional[logging.Logger] = None):
        self.plugin_config: Dict[str, Any] = dict(plugin_specific_config or {})
        self.logger = main_logger or logging.getLogger(self.__class__.__module__)

    @classmethod
    def get_plugin_meta(cls) -> Dict[str, Any]:
        """
        Return capability metadata for the catalog and the offline validator.

        Concrete plugins set PLUGIN_META on the class.
        """
        meta = getattr(cls, "PLUGIN_META", None)
        if isinstance(meta, dict):
            return dict(meta)
        return {
            "plugin_id": cls.__name__,
            "category": "unknown",
            "status": "testing",
            "api_version": 1,
        }

    @property
    @abstractmethod
    def name(self) -> str:
        """Short type name used in config files and descriptors."""

    @property
    @abstractmethod
    def pretty_name(self) -> str:
        """Human-readable name."""


class AdmissibleOrder(AlgebraPlugin):
    """
    A total well-order on the paths of one quiver, compatible with
    concatenation on both sides and refining subpath length.

    `priority` lists arrow names in ascending priority (later = higher); arrows
    left out keep declaration order below the listed ones.
    """

    def __init__(self, quiver: "Quiver", priority: Optional[Sequence[str]] = None,
                 plugin_specific_config: Optional[Dict[str, Any]] = None,
                 main_logger: Optional[logging.Logger] = None):
        super().__init__(plugin_specific_config, main_logger)
        self.quiver = quiver
        names = [a.name for a in quiver.arrows]
        listed = list(priority) if priority else list(names)
        unknown = [n for n in listed if n not in quiver.arrow_index]
        if unknown:
            raise QuiverError(f"Priority list names unknown arrows: {unknown}")
        if len(set(listed)) != len(listed):
            raise QuiverError(f"Priority list repeats arrows: {listed}")
        ordered = [n for n in names if n not in listed] + listed
        self.priority: Tuple[str, ...] = tuple(ordered)
        self.rank: Tuple[int, ...] = tuple(
            ordered.index(a.name) for a in quiver.arrows
        )

    @abstractmethod
    def sort_key(self, path: "Path") -> Tuple:
        """Key whose natural tuple order is this admissible order."""

    def compare(self, p: "Path", q: "Path") -> int:
        """-1, 0 or 1 as p is less than, equal to or greater than q."""
        kp, kq = self.sort_key(p), self.sort_key(q)
        return (kp > kq) - (kp < kq)

    def largest(self, paths: Iterable["Path"]) -> "Path":
        return max(paths, key=self.sort_key)

    def descending(self, paths: Iterable["Path"]) -> List["Path"]:
        return sorted(paths, key=self.sort_key, reverse=True)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AdmissibleOrder):
            return NotImplemented
        return self.name == other.name and self.priority == other.priority and self.quiver == other.quiver

    def __hash__(self) -> int:
        return hash((self.name, self.priority))

    def descriptor(self) -> Dict[str, Any]:
        return {"kind": self.name, "priority": list(self.priority)}


class CoefficientField(AlgebraPlugin):
    """An exact field; scalars are elements of the sympy domain `domain`."""

    @property
    @abstractmethod
    def domain(self) -> Any:
        """The sympy domain (QQ, GF(p), ...)."""

    @property
    @abstractmethod
    def descriptor(self) -> str:
        """Descriptor string round-tripping through core.plugin_manager.load_field."""

    def parse(self, text: Any) -> Any:
        """
        Parse an exact scalar given as an int, "num/den" or a decimal string.
        Floats are refused: they are not exact.
        """
        if isinstance(text, bool) or isinstance(text, float):
            raise InputParseError(f"Coefficient {text!r} is not an exact number")
        try:
            value = Fraction(str(text).strip())
        except (ValueError, ZeroDivisionError) as e:
            raise InputParseError(f"Cannot parse coefficient {text!r}: {e}")
        K = self.domain
        try:
            return K(value.numerator) / K(value.denominator)
        except (ZeroDivisionError, NotInvertible):
            raise InputParseError(f"Coefficient {text!r} has a denominator that vanishes in {self.descriptor}")

    def format(self, value: Any) -> str:
        return str(self.domain.to_sympy(value))
