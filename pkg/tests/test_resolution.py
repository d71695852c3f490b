# tests/test_resolution.py
"""Normal words, Betti tables and the linear-algebra oracle.

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

from algebra.chains import build_chains
from algebra.errors import IncompleteGroebnerError, PreconditionError
from algebra.freealg import AlgebraElement
from algebra.groebner import TipSet, buchberger
from algebra.quiver import Quiver
from algebra.resolution import (
    QuotientAlgebra,
    betti_from_chains,
    compare_tables,
    is_submultiset,
    normal_words,
    oracle_resolution,
)
from core.plugin_manager import load_order


def _loops(names) -> Quiver:
    return Quiver(["v"], [(n, "v", "v") for n in names])


def _rho(quiver: Quiver, *paths) -> TipSet:
    return TipSet(quiver, [quiver.parse_path(p) for p in paths])


class TestNormalWords(unittest.TestCase):
    def test_degree_three_words(self):
        basis = normal_words(_rho(_loops("xy"), "xy", "yyy"), 4)
        self.assertEqual({str(p) for p in basis.words(3)}, {"xxx", "yxx", "yyx"})
        self.assertTrue(basis.is_normal(_loops("xy").parse_path("yyxxxxx")))

    def test_finite_dimensional_top(self):
        basis = normal_words(_rho(_loops("x"), "xxx"), 5)
        self.assertEqual([basis.dimension(k) for k in range(4)], [1, 1, 1, 0])
        self.assertEqual(basis.top_degree(), 2)

    def test_degree_beyond_cap(self):
        basis = normal_words(_rho(_loops("x"), "xxx"), 3)
        with self.assertRaises(PreconditionError):
            basis.words(4)

    def test_products_use_the_basis(self):
        q = _loops("xy")
        order = load_order("deglex", q, ["x", "y"])
        g = buchberger([AlgebraElement(q, QQ, {q.parse_path("yx"): QQ(1), q.parse_path("xy"): QQ(-1)})], order, 5)
        algebra = QuotientAlgebra(g, 5)
        self.assertEqual(algebra.product(q.parse_path("y"), q.parse_path("x")), {q.parse_path("xy"): QQ(1)})


class TestOracle(unittest.TestCase):
    def test_commutative_plane(self):
        q = _loops("xy")
        order = load_order("deglex", q, ["x", "y"])
        g = buchberger([AlgebraElement(q, QQ, {q.parse_path("yx"): QQ(1), q.parse_path("xy"): QQ(-1)})], order, 6)
        oracle = oracle_resolution(g, 3, 6)
        self.assertEqual([oracle.degrees(n) for n in range(4)], [[0], [1, 1], [2], []])
        chains = betti_from_chains(build_chains(TipSet(q, g.tips), 3))
        self.assertEqual(compare_tables(oracle, chains, 6), [])

    def test_cubic_loop_matches_chains(self):
        rho = _rho(_loops("x"), "xxx")
        oracle = oracle_resolution(rho, 5, 9)
        self.assertEqual([oracle.degrees(n) for n in range(6)], [[0], [1], [3], [4], [6], [7]])
        self.assertEqual(compare_tables(oracle, betti_from_chains(build_chains(rho, 5)), 9), [])

    def test_mixed_degree_monomial_matches_chains(self):
        rho = _rho(_loops("xy"), "xy", "yyy")
        oracle = oracle_resolution(rho, 4, 7)
        chains = betti_from_chains(build_chains(rho, 4))
        self.assertEqual(compare_tables(oracle, chains, 7), [])
        self.assertEqual(oracle.degrees(3), [4, 4])

    def test_aabaa_row_three(self):
        rho = _rho(_loops("ab"), "aabaa")
        oracle = oracle_resolution(rho, 3, 9)
        self.assertEqual(sorted(set(oracle.degrees(3))), [8, 9])
        self.assertFalse(oracle.row(3).truncated)

    def test_refuses_short_groebner_basis(self):
        q = _loops("xy")
        order = load_order("deglex", q)
        g = buchberger([AlgebraElement.from_path(q.parse_path("xy"), QQ)], order, 4)
        with self.assertRaises(IncompleteGroebnerError):
            oracle_resolution(g, 3, 6)

    def test_submultiset(self):
        rho = _rho(_loops("x"), "xxx")
        chains = betti_from_chains(build_chains(rho, 4))
        smaller = betti_from_chains(build_chains(rho, 2))
        self.assertTrue(is_submultiset(smaller, chains))

    def test_truncated_chain_rows(self):
        table = betti_from_chains(build_chains(_rho(_loops("xy"), "xy", "yyy"), 4), max_degree=4)
        self.assertFalse(table.row(3).truncated)
        self.assertTrue(table.row(4).truncated)
        self.assertEqual(table.degrees(4), [])


if __name__ == "__main__":
    unittest.main()
