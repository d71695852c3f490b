# tests/test_input_loader.py
"""Algebra input files: parsing, refusals and overrides.

Project: Koszul Toolkit
License: MIT
"""
from __future__ import annotations

import json
import os
import sys
import tempfile
import unittest

ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)

from algebra.errors import InputParseError, PreconditionError, SchemaVersionError
from core.input_loader import load_presentation, presentation_from_dict, presentation_to_dict

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def _load_json(name: str):
    with open(os.path.join(FIXTURES, name), encoding="utf-8-sig") as f:
        return json.load(f)


class TestInputLoader(unittest.TestCase):
    def test_commutator_fixture(self):
        p = load_presentation(os.path.join(FIXTURES, "commutative_plane.json"))
        self.assertEqual(p.name, "commutative plane")
        self.assertEqual(p.quiver.arrow_count, 2)
        self.assertEqual(p.order.priority, ("x", "y"))
        self.assertFalse(p.is_monomial_input)
        self.assertEqual(len(p.relations[0]), 2)

    def test_monomial_shortcuts(self):
        p = presentation_from_dict(_load_json("monomial_xy_y3.json"))
        self.assertTrue(p.is_monomial_input)
        self.assertEqual(sorted(str(r.support[0]) for r in p.relations), ["xy", "yyy"])

    def test_defaults_when_field_and_priority_are_missing(self):
        p = presentation_from_dict(_load_json("cubic_loop.json"))
        self.assertEqual(p.field.descriptor, "rational")
        self.assertEqual(p.order.name, "deglex")

    def test_overrides_win_over_the_file(self):
        p = presentation_from_dict(_load_json("commutative_plane.json"), field_override="fp:5",
                                   order_override="degrevlex")
        self.assertEqual(p.field.descriptor, "fp:5")
        self.assertEqual(p.order.name, "degrevlex")
        self.assertEqual(p.order.priority, ("x", "y"))

    def test_config_default_applies_below_the_file(self):
        payload = _load_json("cubic_loop.json")
        self.assertEqual(presentation_from_dict(payload, default_field="fp:7").field.descriptor, "fp:7")
        payload["field"] = "rational"
        self.assertEqual(presentation_from_dict(payload, default_field="fp:7").field.descriptor, "rational")

    def test_float_coefficient_is_refused(self):
        with self.assertRaises(InputParseError):
            presentation_from_dict(_load_json("bad_coefficient.json"))

    def test_unknown_arrow_is_refused(self):
        payload = _load_json("cubic_loop.json")
        payload["relations"] = [["x", "z"]]
        with self.assertRaises(InputParseError):
            presentation_from_dict(payload)

    def test_bad_priority_is_refused(self):
        payload = _load_json("commutative_plane.json")
        payload["order"]["priority"] = ["x", "q"]
        with self.assertRaises(InputParseError):
            presentation_from_dict(payload)

    def test_missing_quiver_is_refused(self):
        with self.assertRaises(InputParseError):
            presentation_from_dict({"vertices": ["v"]})
        with self.assertRaises(InputParseError):
            presentation_from_dict(["not", "an", "object"])

    def test_unknown_order_is_a_precondition(self):
        with self.assertRaises(PreconditionError):
            presentation_from_dict(_load_json("cubic_loop.json"), order_override="lex")

    def test_newer_schema_is_refused(self):
        payload = _load_json("cubic_loop.json")
        payload["schema_version"] = "2.0"
        with self.assertRaises(SchemaVersionError):
            presentation_from_dict(payload)

    def test_unreadable_files(self):
        with tempfile.TemporaryDirectory() as tmp:
            broken = os.path.join(tmp, "broken.json")
            with open(broken, "w", encoding="utf-8") as f:
                f.write("{ not json")
            with self.assertRaises(InputParseError):
                load_presentation(broken)
            with self.assertRaises(InputParseError):
                load_presentation(os.path.join(tmp, "missing.json"))

    def test_written_input_reads_back(self):
        original = load_presentation(os.path.join(FIXTURES, "commutative_plane.json"))
        again = presentation_from_dict(json.loads(json.dumps(presentation_to_dict(original))))
        self.assertEqual(again.quiver, original.quiver)
        self.assertEqual(again.order, original.order)
        self.assertEqual(again.relations, original.relations)


if __name__ == "__main__":
    unittest.main()
