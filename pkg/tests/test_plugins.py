# tests/test_plugins.py
"""Plugin catalog, order axioms and field plugins.

Project: Koszul Toolkit
License: MIT
"""
from __future__ import annotations

import os
import sys
import unittest
from unittest import mock

ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)

from algebra.errors import InputParseError, PreconditionError
from core.plugin_catalog import find_plugin, list_plugins, plugin_ids
from core.plugin_manager import load_field, load_order
from services.experiment_service import Lcg
from tests.validate_all_plugins import SAMPLE_PRIORITY, SAMPLE_QUIVER, check_field, check_order_axioms


class TestCatalog(unittest.TestCase):
    def test_every_plugin_loads(self):
        entries = list_plugins(include_unloadable=True)
        self.assertEqual(len(entries), 4)
        self.assertTrue(all(e["loadable"] for e in entries))
        self.assertEqual(sorted(plugin_ids("order")), ["deglex", "degrevlex"])
        self.assertEqual(sorted(plugin_ids("field")), ["prime", "rational"])

    def test_lookup_stays_in_category(self):
        self.assertIsNotNone(find_plugin("order", "deglex"))
        self.assertIsNone(find_plugin("field", "deglex"))

    def test_unknown_names(self):
        with self.assertRaises(PreconditionError):
            load_order("lex", SAMPLE_QUIVER)
        for bad in ("reals", "fp:x", "fp:6"):
            with self.assertRaises(PreconditionError):
                load_field(bad)


class TestOrders(unittest.TestCase):
    def test_axioms_hold(self):
        for name in ("deglex", "degrevlex"):
            for seed, priority in ((4, None), (5, SAMPLE_PRIORITY)):
                order = load_order(name, SAMPLE_QUIVER, priority)
                self.assertEqual(check_order_axioms(order, Lcg(seed), 10000), [], f"{name} {priority}")

    def test_path_is_never_below_its_subpaths(self):
        order = load_order("degrevlex", SAMPLE_QUIVER, SAMPLE_PRIORITY)
        path = SAMPLE_QUIVER.path("a", "b", "d", "c", "a")
        for start in range(path.length + 1):
            for stop in range(start, path.length + 1):
                self.assertGreaterEqual(order.compare(path, path.sub(start, stop)), 0, (start, stop))

    def test_reversed_order_is_rejected(self):
        order = load_order("deglex", SAMPLE_QUIVER)
        reversed_order = mock.Mock(quiver=SAMPLE_QUIVER, compare=lambda p, q: order.compare(q, p))
        problems = check_order_axioms(reversed_order, Lcg(6), 200)
        self.assertTrue(any("below its subpath" in p for p in problems))
        self.assertTrue(any("longer path" in p for p in problems))

    def test_priority_is_ascending(self):
        order = load_order("deglex", SAMPLE_QUIVER, SAMPLE_PRIORITY)
        a, b = SAMPLE_QUIVER.path("a"), SAMPLE_QUIVER.path("b")
        self.assertEqual(order.compare(b, a), 1)
        self.assertEqual(order.descriptor(), {"kind": "deglex", "priority": SAMPLE_PRIORITY})

    def test_partial_priority_keeps_declaration_order_below(self):
        order = load_order("deglex", SAMPLE_QUIVER, ["a"])
        self.assertEqual(order.priority, ("b", "c", "d", "a"))


class TestFields(unittest.TestCase):
    def test_sanity(self):
        self.assertEqual(check_field("rational"), [])
        self.assertEqual(check_field("fp:7"), [])

    def test_vanishing_denominator(self):
        with self.assertRaises(InputParseError):
            load_field("fp:5").parse("1/5")

    def test_descriptors(self):
        self.assertEqual(load_field("QQ").descriptor, "rational")
        self.assertEqual(load_field("fp:11").format(load_field("fp:11").parse("12")), "1")


if __name__ == "__main__":
    unittest.main()
