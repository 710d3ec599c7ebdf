"""Drive the prime-weave command line tool through :py:func:`run` with in-memory streams."""

import io
import json
import os
import shutil
import tempfile
import unittest

from ..cli.main import run
from ..graph.codec import serialize_graph
from ..graph.families import FamilySpec
from ..graph.families import build
from ..graph.families import build_complete
from ..labelings.codec import serialize_bundle
from . import testlogging


class CommandLineTestCase(unittest.TestCase):

    def setUp(self):
        testlogging.setup()
        self.test_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.test_dir)

    def invoke(self, *argv, stdin=""):
        """
        :return: tuple (exit code, stdout text, stderr text)
        """
        stdout, stderr = io.StringIO(), io.StringIO()
        code = run(list(argv), stdin=io.StringIO(stdin), stdout=stdout, stderr=stderr, logging_=False)
        return code, stdout.getvalue(), stderr.getvalue()

    def invoke_json(self, *argv, stdin=""):
        code, out, err = self.invoke(*argv, stdin=stdin)
        return code, json.loads(out)

    def write(self, fname, text):
        path = os.path.join(self.test_dir, fname)
        with io.open(path, "wt") as f:
            f.write(text)
        return path

    def assertUsageError(self, *argv, stdin="", mentions=None):
        code, out, err = self.invoke(*argv, stdin=stdin)
        self.assertEqual(code, 2)
        self.assertEqual(out, "")
        self.assertIn("prime-weave: error:", err)
        if mentions:
            self.assertIn(mentions, err)

    def test_gen(self):
        code, data = self.invoke_json("gen", "--family", "hairy", "--n", "4", "--m", "3")
        self.assertEqual(code, 0)
        self.assertEqual(data["n"], 16)
        self.assertEqual(len(data["edges"]), 16)
        self.assertEqual(data["family"], {"tag": "hairy", "n": 4, "m": 3})

    def test_gen_dot(self):
        code, out, err = self.invoke("gen", "--family", "cycle", "--n", "3", "--dot")
        self.assertEqual(code, 0)
        self.assertIn("0 -- 1", out)

    def test_label(self):
        code, out, err = self.invoke("label", "--family", "cycle", "--n", "5")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out), [1, 2, 3, 4, 5])

    def test_label_dot(self):
        code, out, err = self.invoke("label", "--family", "star", "--n", "3", "--dot")
        self.assertEqual(code, 0)
        self.assertIn("label=1", out)

    def test_label_figure(self):
        code, labels = self.invoke_json("label", "--family", "hairy", "--n", "4", "--m", "3")
        self.assertEqual(code, 0)
        # Cycle vertices open each clump of four
        self.assertEqual([labels[v] for v in (0, 4, 8, 12)], [1, 7, 11, 15])

    def test_pipeline(self):
        """gen | label --stdin --bundle | verify --stdin"""
        families = [
            ("path", "9"), ("cycle", "9"), ("star", "9"), ("weed", "5"),
            ("hairy", "7", "--m", "3"), ("hairy", "7", "--m", "5"), ("hairy", "7", "--m", "7"), ("hairy", "7", "--m", "4"),
            ("cps", "7", "--levels", "1"), ("cps", "7", "--levels", "2"),
        ]
        for family, n, *extra in families:
            code, graph_text, err = self.invoke("gen", "--family", family, "--n", n, *extra)
            self.assertEqual(code, 0, err)
            code, bundle_text, err = self.invoke("label", "--stdin", "--bundle", stdin=graph_text)
            self.assertEqual(code, 0, err)
            code, report = self.invoke_json("verify", "--stdin", stdin=bundle_text)
            self.assertEqual(code, 0, family)
            self.assertEqual(report, {"bijection_ok": True, "violations": []})

    def test_cyclepath_is_left_to_the_solver(self):
        code, graph_text, err = self.invoke("gen", "--family", "cyclepath", "--n", "4", "--m", "2")
        self.assertEqual(code, 0)
        self.assertUsageError("label", "--stdin", stdin=graph_text)
        code, data = self.invoke_json("solve", "--stdin", stdin=graph_text)
        self.assertEqual(code, 0)
        self.assertEqual(data["outcome"], "found")

    def test_output_is_stable(self):
        argv = ("solve", "--family", "cps", "--n", "4", "--levels", "1")
        self.assertEqual(self.invoke(*argv), self.invoke(*argv))

    def test_label_stdin_needs_family(self):
        graph_text = serialize_graph(build_complete(3))
        self.assertUsageError("label", "--stdin", stdin=graph_text, mentions="--stdin")

    def test_verify_files(self):
        graph_file = self.write("c4.json", serialize_graph(build(FamilySpec.cycle(4))))
        labels_file = self.write("labels.json", "[1, 2, 4, 3]")
        code, report = self.invoke_json("verify", "--graph", graph_file, "--labels", labels_file)
        self.assertEqual(code, 1)
        self.assertTrue(report["bijection_ok"])
        self.assertEqual(report["violations"], [{"u": 1, "v": 2, "lu": 2, "lv": 4, "gcd": 2}])

    def test_verify_not_a_bijection(self):
        graph_file = self.write("p3.json", serialize_graph(build(FamilySpec.path(3))))
        labels_file = self.write("labels.json", "[1, 2, 4]")
        code, report = self.invoke_json("verify", "--graph", graph_file, "--labels", labels_file)
        self.assertEqual(code, 1)
        self.assertFalse(report["bijection_ok"])

    def test_verify_zero_label(self):
        bundle = serialize_bundle(build(FamilySpec.path(3)), [0, 1, 2])
        code, report = self.invoke_json("verify", "--stdin", stdin=bundle)
        self.assertEqual(code, 1)
        self.assertEqual(report, {"bijection_ok": False, "violations": []})

    def test_verify_bad_input(self):
        graph_file = self.write("broken.json", '{"n": 3, "edges": [[0, 1], [1]]}')
        labels_file = self.write("labels.json", "[1, 2, 3]")
        self.assertUsageError("verify", "--graph", graph_file, "--labels", labels_file, mentions="edges.1")
        self.assertUsageError("verify", "--graph", graph_file)
        self.assertUsageError("verify", "--graph", os.path.join(self.test_dir, "nope.json"), "--labels", labels_file, mentions="--graph")

    def test_solve(self):
        code, data = self.invoke_json("solve", "--family", "hairy", "--n", "3", "--m", "7")
        self.assertEqual(code, 0)
        self.assertEqual(data["outcome"], "found")
        self.assertEqual(sorted(data["labels"]), list(range(1, 25)))
        self.assertNotIn("nodes_expanded", data)

    def test_solve_stats(self):
        code, data = self.invoke_json("solve", "--family", "cycle", "--n", "6", "--stats")
        self.assertEqual(code, 0)
        self.assertIn("nodes_expanded", data)
        self.assertIn("backtracks", data)

    def test_solve_without_labeling(self):
        graph_file = self.write("k4.json", serialize_graph(build_complete(4)))
        code, data = self.invoke_json("solve", "--graph", graph_file)
        self.assertEqual(code, 1)
        self.assertEqual(data, {"outcome": "no_solution"})

    def test_solve_budget(self):
        code, data = self.invoke_json("solve", "--family", "cycle", "--n", "5", "--max-nodes", "0")
        self.assertEqual(code, 1)
        self.assertEqual(data, {"outcome": "budget_exceeded"})

    def test_solve_stdin(self):
        code, data = self.invoke_json("solve", "--stdin", stdin=serialize_graph(build_complete(3)))
        self.assertEqual(code, 0)
        self.assertEqual(data, {"outcome": "found", "labels": [1, 2, 3]})

    def test_graph_sources(self):
        graph_file = self.write("k4.json", serialize_graph(build_complete(4)))
        self.assertUsageError("solve", "--family", "cycle", "--n", "4", "--graph", graph_file, mentions="exactly one")
        self.assertUsageError("count")

    def test_count(self):
        code, data = self.invoke_json("count", "--family", "cycle", "--n", "4")
        self.assertEqual(code, 0)
        self.assertEqual(data, {"count": 8})

    def test_count_guard(self):
        self.assertUsageError("count", "--family", "cycle", "--n", "4", "--guard", "3")
        self.assertUsageError("count", "--family", "path", "--n", "11")

    def test_scan(self):
        code, data = self.invoke_json("scan", "--max-n", "5")
        self.assertEqual(code, 0)
        self.assertEqual(sorted(data["per_n"]), ["3", "4", "5"])
        self.assertEqual(data["counterexamples"], [])

    def test_scan_output_file(self):
        fname = os.path.join(self.test_dir, "scan.json")
        code, data = self.invoke_json("scan", "--max-n", "4", "--output", fname)
        self.assertEqual(code, 0)
        with io.open(fname, "rt") as f:
            self.assertEqual(json.load(f), data)

    def test_scan_cap(self):
        self.assertUsageError("scan", "--max-n", "11")
        self.assertUsageError("scan", "--max-n", "6", "--cap", "5")

    def test_pillai(self):
        code, data = self.invoke_json("pillai", "--m", "2", "--limit", "1000000")
        self.assertEqual(code, 0)
        self.assertEqual(data, {"found": False})

    def test_pillai_found(self):
        code, data = self.invoke_json("pillai", "--m", "17", "--limit", "3000")
        self.assertEqual(code, 0)
        self.assertEqual(data, {"found": True, "start": 2184, "m": 17})

    def test_check(self):
        code, data = self.invoke_json("check", "--family", "hairy", "--from", "3", "--to", "50", "--m", "3")
        self.assertEqual(code, 0)
        self.assertEqual(data, {"family": "hairy", "passes": 48, "failures": [], "m": 3})

    def test_check_limits(self):
        self.assertUsageError("check", "--family", "weed", "--from", "3", "--to", "30")
        self.assertUsageError("check", "--family", "path", "--from", "2", "--to", "100", "--vertex-cap", "10")
        self.assertUsageError("check", "--family", "cyclepath", "--from", "3", "--to", "5", "--m", "2")

    def test_config_file(self):
        config = os.path.join(os.path.dirname(__file__), "sample-config.yaml")
        code, out, err = self.invoke("--config", config, "label", "--family", "path", "--n", "4")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out), [4, 3, 2, 1])

    def test_broken_config(self):
        broken = os.path.join(os.path.dirname(__file__), "broken-config-unknown-section.yaml")
        self.assertUsageError("--config", broken, "count", "--family", "cycle", "--n", "4", mentions="--config")
        self.assertUsageError("--config", os.path.join(self.test_dir, "missing.yaml"), "pillai", "--m", "2", "--limit", "5", mentions="--config")

    def test_family_parameter_errors_name_the_flag(self):
        self.assertUsageError("gen", "--family", "cps", "--n", "3", "--levels", "3", mentions="--levels:")
        self.assertUsageError("gen", "--family", "hairy", "--n", "4", mentions="--m:")
        self.assertUsageError("gen", "--family", "cycle", "--n", "4", "--m", "2", mentions="--m:")
        self.assertUsageError("gen", "--family", "path", "--n", "3", "--levels", "1", mentions="--levels:")
        self.assertUsageError("gen", "--family", "cycle", "--n", "2", mentions="--n:")
        self.assertUsageError("check", "--family", "cps", "--from", "3", "--to", "5", "--levels", "3", mentions="--levels:")
        self.assertUsageError("check", "--family", "cycle", "--from", "1", "--to", "5", mentions="--from:")

    def test_usage_errors(self):
        self.assertUsageError()
        self.assertUsageError("frobnicate")
        self.assertUsageError("gen", "--family", "hairy")
        self.assertUsageError("gen", "--family", "cps", "--n", "3", mentions="--levels")
        self.assertUsageError("gen", "--family", "pretzel", "--n", "3")
        self.assertUsageError("gen", "--family", "cycle", "--n", "zero")
        self.assertUsageError("solve", "--family", "cycle", "--n", "4", "--time-limit", "-1")
        self.assertUsageError("label", "--family", "cycle", "--n", "4", "--bundle", "--dot")

    def test_usage_text_on_parse_error(self):
        code, out, err = self.invoke("pillai", "--m", "2")
        self.assertEqual(code, 2)
        self.assertIn("usage:", err)
        self.assertIn("--limit", err)
