# tests/test_serialization.py
"""JSON payloads: read-back equality and schema checks.

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

from algebra.chains import build_chains
from algebra.errors import InputParseError, SchemaVersionError
from algebra.groebner import buchberger, tip_ideal
from algebra.koszul import Bounds, classify, degree_function_from_spec
from algebra.resolution import betti_from_chains, oracle_resolution
from core.input_loader import load_presentation
from core.serialization import (
    KIND_BETTI,
    betti_from_dict,
    betti_to_dict,
    chains_from_dict,
    chains_to_dict,
    check_schema_version,
    dumps,
    groebner_from_dict,
    groebner_to_dict,
    loads,
    parse_payload,
    report_from_dict,
    report_to_dict,
)

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def _presentation(name: str, field: str = None):
    return load_presentation(os.path.join(FIXTURES, name), field_override=field)


def _through_text(payload):
    return loads(dumps(payload))


class TestPayloads(unittest.TestCase):
    def test_groebner_basis(self):
        for field in ("rational", "fp:7"):
            p = _presentation("commutative_plane.json", field)
            basis = buchberger(p.relations, p.order, 5, domain=p.domain)
            self.assertEqual(groebner_from_dict(_through_text(groebner_to_dict(basis))), basis)

    def test_chain_table(self):
        p = _presentation("monomial_xy_y3.json")
        table = build_chains(tip_ideal(buchberger(p.relations, p.order, 6)), 5)
        again = chains_from_dict(_through_text(chains_to_dict(table)))
        self.assertEqual(again, table)
        chain = again.level(4)[-1]
        self.assertEqual(str(chain.parent.word), "yyyy")
        self.assertEqual(str(chain.head), "yyy")

    def test_betti_tables(self):
        p = _presentation("cubic_loop.json")
        basis = buchberger(p.relations, p.order, 7)
        chains = betti_from_chains(build_chains(tip_ideal(basis), 4))
        oracle = oracle_resolution(basis, 4, 7)
        for table in (chains, oracle):
            self.assertEqual(betti_from_dict(_through_text(betti_to_dict(table))), table)

    def test_report(self):
        bounds = Bounds(7, 4, functions=[degree_function_from_spec("delta:3", 4)])
        report = classify(_presentation("monomial_xy_y3.json"), bounds)
        payload = _through_text(report_to_dict(report))
        self.assertIn("timing", payload)
        self.assertEqual(report_from_dict(payload), report)

    def test_report_without_timing(self):
        report = classify(_presentation("commutative_plane.json"), Bounds(5, 3, run_oracle=False))
        payload = report_to_dict(report, include_timing=False)
        self.assertNotIn("timing", payload)
        self.assertEqual(report_from_dict(payload), report)

    def test_dispatch_on_kind(self):
        p = _presentation("cubic_loop.json")
        table = betti_from_chains(build_chains(tip_ideal(buchberger(p.relations, p.order, 5)), 3))
        payload = betti_to_dict(table)
        self.assertEqual(payload["kind"], KIND_BETTI)
        self.assertEqual(parse_payload(payload), table)
        self.assertIsNone(parse_payload({"kind": "algebra"}))


class TestSchema(unittest.TestCase):
    def test_versions(self):
        check_schema_version({})
        check_schema_version({"schema_version": "1.7"})
        with self.assertRaises(SchemaVersionError):
            check_schema_version({"schema_version": "2.0"})
        with self.assertRaises(SchemaVersionError):
            check_schema_version({"schema_version": "one"})

    def test_wrong_kind(self):
        with self.assertRaises(InputParseError):
            betti_from_dict({"schema_version": "1.0", "kind": "chain_table"})

    def test_invalid_text(self):
        with self.assertRaises(InputParseError):
            loads("{")

    def test_unknown_verdict_status(self):
        report = classify(_presentation("commutative_plane.json"), Bounds(5, 3, run_oracle=False))
        payload = report_to_dict(report)
        payload["verdicts"]["d_koszul"]["status"] = "maybe"
        with self.assertRaises(InputParseError):
            report_from_dict(payload)


if __name__ == "__main__":
    unittest.main()
