# tests/test_freealg.py
"""Path algebra elements, tips and reduction.

Project: Koszul Toolkit
License: MIT
"""
from __future__ import annotations

import os
import sys
import unittest

ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)

from sympy import QQ

from algebra.errors import NonUniformError, ZeroElementError
from algebra.freealg import (
    SITE_RIGHTMOST_SMALLEST,
    AlgebraElement,
    monic,
    reduce,
    reduce_with_trace,
    replay_trace,
    tip,
)
from algebra.quiver import Quiver
from core.plugin_manager import load_order


def _element(quiver: Quiver, terms: dict) -> AlgebraElement:
    return AlgebraElement(quiver, QQ, {quiver.parse_path(text): QQ(c) for text, c in terms.items()})


class TestAlgebraElement(unittest.TestCase):
    def setUp(self):
        self.q = Quiver(["v"], [("x", "v", "v"), ("y", "v", "v")])
        self.deglex = load_order("deglex", self.q, ["x", "y"])

    def test_zero_terms_are_dropped(self):
        a = _element(self.q, {"xy": 1, "yx": -1})
        self.assertTrue((a - a).is_zero())
        self.assertEqual(len(a + _element(self.q, {"xy": -1})), 1)

    def test_product_is_concatenation(self):
        a = _element(self.q, {"x": 1, "y": 2})
        b = _element(self.q, {"y": 1})
        self.assertEqual(a * b, _element(self.q, {"xy": 1, "yy": 2}))

    def test_mismatched_endpoints_vanish(self):
        q = Quiver(["1", "2"], [("a", "1", "2"), ("b", "2", "1")])
        a = AlgebraElement.from_path(q.path("a"), QQ)
        self.assertTrue((a * a).is_zero())
        self.assertFalse((a * AlgebraElement.from_path(q.path("b"), QQ)).is_zero())

    def test_tip_and_monic(self):
        a = _element(self.q, {"yx": 2, "xy": -1})
        self.assertEqual(str(tip(a, self.deglex)), "yx")
        m = monic(a, self.deglex)
        self.assertEqual(m.coefficient(self.q.parse_path("yx")), QQ(1))
        self.assertEqual(m.coefficient(self.q.parse_path("xy")), QQ(-1, 2))

    def test_degrevlex_picks_the_other_tip(self):
        degrevlex = load_order("degrevlex", self.q, ["x", "y"])
        a = _element(self.q, {"yx": 1, "xy": -1})
        self.assertEqual(str(tip(a, degrevlex)), "xy")

    def test_zero_has_no_tip(self):
        with self.assertRaises(ZeroElementError):
            tip(AlgebraElement.zero(self.q, QQ), self.deglex)

    def test_uniform_components(self):
        q = Quiver(["1", "2"], [("a", "1", "1"), ("b", "1", "2"), ("c", "2", "2")])
        x = AlgebraElement(q, QQ, {q.path("a", "a"): QQ(1), q.path("b", "c"): QQ(1)})
        self.assertFalse(x.is_uniform())
        parts = x.uniform_components()
        self.assertEqual(len(parts), 2)
        self.assertTrue(all(p.is_uniform() for p in parts))


class TestReduction(unittest.TestCase):
    def setUp(self):
        self.q = Quiver(["v"], [("x", "v", "v"), ("y", "v", "v")])
        self.order = load_order("deglex", self.q, ["x", "y"])
        self.commutator = _element(self.q, {"yx": 1, "xy": -1})

    def test_sorts_letters(self):
        nf = reduce(_element(self.q, {"yyx": 1}), [self.commutator], self.order)
        self.assertEqual(nf, _element(self.q, {"xyy": 1}))

    def test_trace_replays_the_difference(self):
        x = _element(self.q, {"yxyx": 3, "yyx": 1})
        for policy in ("leftmost_largest", SITE_RIGHTMOST_SMALLEST):
            nf, trace = reduce_with_trace(x, [self.commutator], self.order, policy)
            self.assertEqual(nf, _element(self.q, {"xxyy": 3, "xyy": 1}))
            self.assertEqual(replay_trace(trace, [self.commutator], self.order, self.q, QQ), x - nf)

    def test_normal_form_keeps_irreducible_terms(self):
        x = _element(self.q, {"xxy": 5})
        self.assertEqual(reduce(x, [self.commutator], self.order), x)

    def test_non_uniform_reducer_is_refused(self):
        q = Quiver(["1", "2"], [("a", "1", "1"), ("b", "1", "2"), ("c", "2", "2")])
        order = load_order("deglex", q)
        bad = AlgebraElement(q, QQ, {q.path("a", "a"): QQ(1), q.path("b", "c"): QQ(1)})
        with self.assertRaises(NonUniformError):
            reduce(AlgebraElement.from_path(q.path("a", "a", "a"), QQ), [bad], order)


if __name__ == "__main__":
    unittest.main()
