# tests/test_koszul.py
"""Decision procedures and the classification pipeline.

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
from algebra.errors import MixedDegreeError, PreconditionError, TruncatedRowError, WrongDegreeProfileError
from algebra.freealg import AlgebraElement
from algebra.groebner import TipSet
from algebra.koszul import (
    Bounds,
    DegreeFunction,
    check_ext_generation_012,
    check_f_determined,
    classify,
    degree_function_from_spec,
    delta,
    delta_table,
    is_2d_determined_monomial,
    is_d_koszul_monomial,
    projective_dimension_bound,
)
from algebra.presentation import AlgebraPresentation
from algebra.quiver import Quiver
from algebra.resolution import betti_from_chains
from core.input_loader import load_presentation
from core.plugin_manager import load_field, load_order
from utils.helpers import MODE_STRICT, MODE_WEAK

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def _fixture(name: str) -> AlgebraPresentation:
    return load_presentation(os.path.join(FIXTURES, name))


def _rho(names, *paths) -> TipSet:
    q = Quiver(["v"], [(n, "v", "v") for n in names])
    return TipSet(q, [q.parse_path(p) for p in paths])


class TestDegreeFunctions(unittest.TestCase):
    def test_delta_values(self):
        self.assertEqual(delta(0, 3), 0)
        self.assertEqual(delta(1, 3), 1)
        self.assertEqual(delta(4, 3), 6)
        self.assertEqual(delta(5, 4), 9)
        self.assertEqual(delta_table(2, 4), [0, 1, 2, 3, 4])

    def test_delta_domain(self):
        with self.assertRaises(PreconditionError):
            delta(2, 1)

    def test_spec_parsing(self):
        F = degree_function_from_spec("linear:2,0", 5)
        self.assertEqual([F(n) for n in range(4)], [0, 2, 4, 6])
        table = degree_function_from_spec("table:0,1,3", 10)
        self.assertEqual(table.cap, 2)
        self.assertEqual(degree_function_from_spec("delta:3", 4).spec, "delta:3")
        with self.assertRaises(PreconditionError):
            degree_function_from_spec("cubic:1", 4)

    def test_function_must_dominate_n(self):
        with self.assertRaises(PreconditionError):
            DegreeFunction("table", (0, 1, 1), 2)

    def test_projective_dimension_bound(self):
        self.assertEqual(projective_dimension_bound(degree_function_from_spec("table:0,1,3,3", 5)), 2)
        self.assertIsNone(projective_dimension_bound(degree_function_from_spec("delta:3", 6)))


class TestMonomialDecisions(unittest.TestCase):
    def test_cube_of_a_loop_is_three_koszul(self):
        verdict = is_d_koszul_monomial(_rho("y", "yyy"), 3)
        self.assertTrue(verdict.is_yes)
        self.assertTrue(verdict.exact)
        self.assertTrue(verdict.evidence["routes_agree"])

    def test_aabaa_is_not_five_koszul(self):
        verdict = is_d_koszul_monomial(_rho("ab", "aabaa"), 5)
        self.assertTrue(verdict.is_no)
        self.assertEqual(sorted(w["length"] for w in verdict.witnesses), [8, 9])
        self.assertTrue(verdict.evidence["routes_agree"])
        self.assertTrue(verdict.evidence["subpath_witnesses"])

    def test_quadratic_monomials_are_koszul(self):
        verdict = is_d_koszul_monomial(_rho("xy", "xy", "yx", "yy"), 2)
        self.assertTrue(verdict.is_yes)

    def test_mixed_degrees_are_refused(self):
        with self.assertRaises(MixedDegreeError):
            is_d_koszul_monomial(_rho("xy", "xy", "yyy"), 3)

    def test_two_d_determined_by_top_stratum(self):
        verdict = is_2d_determined_monomial(_rho("xy", "xy", "yyy"), 3)
        self.assertTrue(verdict.is_yes)
        self.assertTrue(verdict.evidence["routes_agree"])

    def test_two_d_fails_with_bad_top_stratum(self):
        verdict = is_2d_determined_monomial(_rho("abxy", "xy", "aabaa"), 5)
        self.assertTrue(verdict.is_no)
        self.assertFalse(verdict.evidence["level_three_route"])
        self.assertTrue(verdict.evidence["routes_agree"])

    def test_two_d_profile_checks(self):
        with self.assertRaises(WrongDegreeProfileError):
            is_2d_determined_monomial(_rho("xy", "xy", "yyy"), 4)
        self.assertEqual(is_2d_determined_monomial(_rho("xy", "xy"), 3).status, "out_of_scope")

    def test_ext_factorization(self):
        self.assertTrue(check_ext_generation_012(build_chains(_rho("x", "xxx"), 6)).is_yes)
        self.assertTrue(check_ext_generation_012(build_chains(_rho("xy", "xy", "yyy"), 5)).is_yes)
        failed = check_ext_generation_012(build_chains(_rho("ab", "aabaa"), 3))
        self.assertTrue(failed.is_no)
        self.assertEqual(failed.witnesses[0]["n"], 3)


class TestFDetermined(unittest.TestCase):
    def setUp(self):
        self.table = betti_from_chains(build_chains(_rho("xy", "xy", "yyy"), 4))
        self.delta3 = DegreeFunction("delta", (3,), 4)

    def test_weak_delta(self):
        verdict = check_f_determined(self.table, self.delta3, MODE_WEAK)
        self.assertTrue(verdict.is_yes)
        self.assertFalse(verdict.exact)
        self.assertEqual(verdict.bound, 4)

    def test_strict_delta_has_witnesses(self):
        verdict = check_f_determined(self.table, self.delta3, MODE_STRICT)
        self.assertTrue(verdict.is_no)
        self.assertTrue(verdict.exact)
        self.assertEqual((verdict.witnesses[0]["n"], verdict.witnesses[0]["degree"]), (2, 2))
        self.assertIn((4, 5), [(w["n"], w["degree"]) for w in verdict.witnesses])

    def test_truncated_rows(self):
        truncated = betti_from_chains(build_chains(_rho("xy", "xy", "yyy"), 4), max_degree=4)
        with self.assertRaises(TruncatedRowError):
            check_f_determined(truncated, self.delta3, MODE_WEAK)
        verdict = check_f_determined(truncated, self.delta3, MODE_WEAK, allow_truncated=True)
        self.assertTrue(verdict.is_yes)
        self.assertEqual(verdict.bound, 3)

    def test_unknown_mode(self):
        with self.assertRaises(PreconditionError):
            check_f_determined(self.table, self.delta3, "sideways")


class TestClassify(unittest.TestCase):
    def test_commutative_plane(self):
        report = classify(_fixture("commutative_plane.json"), Bounds(6, 4))
        self.assertTrue(report.groebner["complete"])
        self.assertEqual(report.groebner["tips"], ["yx"])
        self.assertTrue(report.verdicts["d_koszul"].is_yes)
        self.assertTrue(report.verdicts["ext_generated_012"].is_yes)
        self.assertEqual(report.verdicts["two_d_determined"].status, "out_of_scope")
        self.assertEqual(report.global_dimension_bound, 2)
        self.assertTrue(report.ags_minimal.is_yes)
        self.assertEqual(report.inconclusive(), [])

    def test_mixed_monomial(self):
        bounds = Bounds(7, 4, functions=[degree_function_from_spec("delta:3", 4)])
        report = classify(_fixture("monomial_xy_y3.json"), bounds)
        verdicts = report.verdicts
        self.assertTrue(verdicts["two_d_determined"].is_yes)
        self.assertTrue(verdicts["two_d_koszul"].is_yes)
        self.assertTrue(verdicts["ext_generated_012"].is_yes)
        self.assertTrue(verdicts["d_koszul"].is_no)

        checks = report.f_checks["delta:3"]
        self.assertTrue(checks["lambda_mon_weak"].is_yes)
        self.assertTrue(checks["lambda_weak"].is_yes)
        self.assertTrue(checks["lambda_mon_strict"].is_no)
        self.assertTrue(checks["lambda_strict"].is_no)

    def test_aabaa(self):
        report = classify(_fixture("aabaa.json"), Bounds(9, 3, run_oracle=False))
        verdict = report.verdicts["d_koszul"]
        self.assertTrue(verdict.is_no)
        self.assertTrue(verdict.exact)
        self.assertEqual(len(verdict.witnesses), 2)
        self.assertTrue(report.ags_minimal.is_yes)

    def test_no_relations(self):
        report = classify(_fixture("empty_relations.json"), Bounds(4, 3))
        self.assertEqual(report.verdicts["d_koszul"].status, "out_of_scope")
        self.assertEqual(report.global_dimension_bound, 1)

    def test_truncated_basis_is_inconclusive(self):
        q = Quiver(["v"], [("x", "v", "v"), ("y", "v", "v")])
        field = load_field("rational")
        order = load_order("deglex", q, ["x", "y"])
        relation = AlgebraElement(q, QQ, {q.parse_path("yy"): QQ(1), q.parse_path("xx"): QQ(-1)})
        report = classify(AlgebraPresentation(q, field, order, [relation], "squares"), Bounds(3, 3, run_oracle=False))
        self.assertEqual(report.verdicts["d_koszul"].status, "inconclusive")
        self.assertIn("d_koszul", report.inconclusive())

    def test_truncated_basis_blocks_f_transfer(self):
        # yy - xy has an infinite basis: yy, yxy, yxxy, ...
        table_f = degree_function_from_spec("table:0,1,2,3", 3)
        report = classify(_fixture("yy_minus_xy.json"), Bounds(2, 3, functions=[table_f], run_oracle=False))
        self.assertFalse(report.groebner["complete"])
        self.assertEqual(report.groebner["tips"], ["yy"])
        checks = report.f_checks["table:0,1,2,3"]
        for key in ("lambda_mon_weak", "lambda_mon_strict", "lambda_weak", "lambda_strict"):
            self.assertEqual(checks[key].status, "inconclusive", key)
        self.assertEqual(checks["lambda_mon_strict"].bound, 2)
        self.assertIn("table:0,1,2,3/lambda_strict", report.inconclusive())

    def test_truncated_basis_still_reports_visible_failures(self):
        table_f = degree_function_from_spec("table:0,1,2,3", 3)
        report = classify(_fixture("yy_minus_xy.json"), Bounds(8, 3, functions=[table_f], run_oracle=False))
        self.assertFalse(report.groebner["complete"])
        mon = report.f_checks["table:0,1,2,3"]["lambda_mon_strict"]
        self.assertTrue(mon.is_no)
        self.assertTrue(all(w["degree"] <= 8 for w in mon.witnesses))
        self.assertIn({"n": 2, "vertex": "v", "degree": 3, "expected": 2, "multiplicity": 1}, mon.witnesses)
        self.assertNotEqual(report.f_checks["table:0,1,2,3"]["lambda_strict"].status, "yes")

    def test_d_override_for_cubic_loop(self):
        report = classify(_fixture("cubic_loop.json"), Bounds(9, 5, d_override=3))
        verdict = report.verdicts["d_koszul"]
        self.assertTrue(verdict.is_yes)
        self.assertEqual(verdict.evidence["oracle_row3_degrees"], [4])


if __name__ == "__main__":
    unittest.main()
