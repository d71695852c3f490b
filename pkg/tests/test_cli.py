# tests/test_cli.py
"""Command-line subcommands and the exit-code contract.

Project: Koszul Toolkit
License: MIT
"""
from __future__ import annotations

import json
import logging
import os
import sys
import tempfile
import unittest
from unittest import mock

ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)

from core.constants import EXIT_INCONCLUSIVE, EXIT_OK, EXIT_PARSE_ERROR, EXIT_PRECONDITION
from core.input_loader import load_presentation
from main import main

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


class TestCli(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)
        env = mock.patch.dict(os.environ, {}, clear=True)
        env.start()
        self.addCleanup(env.stop)
        self.addCleanup(logging.getLogger().handlers.clear)

    def _run(self, command: str, fixture: str = None, *extra: str) -> int:
        argv = [command, "--config", os.path.join(self.tmp.name, "none.ini"), "--log-level", "ERROR"]
        if fixture:
            argv += ["--input", os.path.join(FIXTURES, fixture)]
        return main(argv + list(extra))

    def _out(self, name: str) -> str:
        return os.path.join(self.tmp.name, name)

    def _read_json(self, name: str):
        with open(self._out(name), encoding="utf-8") as f:
            return json.load(f)

    def test_report_json(self):
        code = self._run("report", "commutative_plane.json", "--max-degree", "6", "--max-n", "4",
                         "--out", self._out("report.json"))
        self.assertEqual(code, EXIT_OK)
        payload = self._read_json("report.json")
        self.assertEqual(payload["kind"], "koszul_report")
        self.assertEqual(payload["verdicts"]["d_koszul"]["status"], "yes")
        self.assertEqual(payload["global_dimension_bound"], 2)

    def test_report_text(self):
        code = self._run("report", "monomial_xy_y3.json", "--format", "text", "--check-F", "delta:3",
                         "--max-degree", "7", "--max-n", "4", "--out", self._out("report.txt"))
        self.assertEqual(code, EXIT_OK)
        with open(self._out("report.txt"), encoding="utf-8") as f:
            text = f.read()
        self.assertIn("two_d_determined", text)
        self.assertIn("F = delta:3", text)

    def test_groebner_and_chains(self):
        self.assertEqual(self._run("gb", "commutative_plane.json", "--out", self._out("gb.json")), EXIT_OK)
        self.assertEqual(self._read_json("gb.json")["tips"], [["y", "x"]])
        self.assertEqual(self._run("ap", "monomial_xy_y3.json", "--max-n", "4", "--out", self._out("ap.json")), EXIT_OK)
        levels = self._read_json("ap.json")["levels"]
        self.assertEqual(sorted(entry["length"] for entry in levels[4]), [5, 6])

    def test_resolve_and_oracle_agree(self):
        self._run("resolve", "cubic_loop.json", "--max-n", "4", "--out", self._out("resolve.json"))
        self._run("oracle", "cubic_loop.json", "--max-n", "4", "--max-degree", "7", "--out", self._out("oracle.json"))
        chains = [[e["degree"] for e in row["entries"]] for row in self._read_json("resolve.json")["rows"]]
        oracle = [[e["degree"] for e in row["entries"]] for row in self._read_json("oracle.json")["rows"]]
        self.assertEqual(chains, oracle)
        self.assertEqual(oracle, [[0], [1], [3], [4], [6]])

    def test_mon_writes_an_input_file(self):
        self.assertEqual(self._run("mon", "commutative_plane.json", "--out", self._out("mon.json")), EXIT_OK)
        monomial = load_presentation(self._out("mon.json"))
        self.assertTrue(monomial.is_monomial_input)
        self.assertEqual([str(r.support[0]) for r in monomial.relations], ["yx"])

    def test_parse_errors_exit_two(self):
        self.assertEqual(self._run("report", "bad_coefficient.json"), EXIT_PARSE_ERROR)
        self.assertEqual(self._run("gb", "missing.json"), EXIT_PARSE_ERROR)
        self.assertEqual(self._run("gb"), EXIT_PARSE_ERROR)

    def test_preconditions_exit_three(self):
        self.assertEqual(self._run("gb", "inhomogeneous.json"), EXIT_PRECONDITION)
        self.assertEqual(self._run("gb", "cubic_loop.json", "--order", "lex"), EXIT_PRECONDITION)
        self.assertEqual(self._run("report", "cubic_loop.json", "--check-F", "cubic:1"), EXIT_PRECONDITION)

    def test_strict_incomplete_exit_four(self):
        path = self._out("squares.json")
        with open(path, "w", encoding="utf-8") as f:
            json.dump({
                "vertices": ["v"], "arrows": [["x", "v", "v"], ["y", "v", "v"]],
                "order": {"kind": "deglex", "priority": ["x", "y"]},
                "relations": [[{"coeff": "1", "path": "yy"}, {"coeff": "-1", "path": "xx"}]],
            }, f)
        argv = ["gb", "--config", self._out("none.ini"), "--log-level", "ERROR", "--input", path,
                "--max-degree", "2", "--out", self._out("gb.json")]
        self.assertEqual(main(argv), EXIT_OK)
        self.assertEqual(main(argv + ["--strict"]), EXIT_INCONCLUSIVE)
        report = ["report", "--config", self._out("none.ini"), "--log-level", "ERROR", "--input", path,
                  "--max-degree", "3", "--no-oracle", "--strict", "--out", self._out("r.json")]
        self.assertEqual(main(report), EXIT_INCONCLUSIVE)

    def test_tip_commands_warn_on_incomplete_basis(self):
        for command in ("mon", "ap", "resolve"):
            with self.assertLogs("KoszulCore", level="WARNING") as logs:
                code = self._run(command, "yy_minus_xy.json", "--max-degree", "3", "--max-n", "3",
                                 "--out", self._out(f"{command}.json"))
            self.assertEqual(code, EXIT_OK)
            self.assertTrue(any("Groebner basis incomplete at degree 3" in line for line in logs.output), command)

    def test_experiment_with_no_instances(self):
        self.assertEqual(self._run("experiment", None, "--count", "0", "--out", self._out("sweep.csv")), EXIT_OK)
        with open(self._out("sweep.csv"), encoding="utf-8") as f:
            lines = f.read().splitlines()
        self.assertEqual(len(lines), 1)
        self.assertTrue(lines[0].startswith("index,vertices,arrows"))


if __name__ == "__main__":
    unittest.main()
