import itertools
import unittest

import pytest

from ..errors import SolverError
from ..graph.enumeration import enumerate_unicyclic
from ..graph.families import FamilySpec
from ..graph.families import build
from ..graph.families import build_complete
from ..graph.model import Graph
from ..labelings.base import verify
from ..labelings.hairy import label_hairy_blocks
from ..labelings.known import label_cycle
from ..labelings.known import label_path
from ..labelings.known import label_star
from ..solver.count import count_labelings
from ..solver.count import iter_labelings
from ..solver.count import static_order
from ..solver.search import Budget
from ..solver.search import Outcome
from ..solver.search import solve
from .base import LabelingAssertions
from .base import is_slow_test_hostile


def brute_force_count(g):
    return sum(1 for labels in itertools.permutations(range(1, g.n + 1)) if verify(g, labels).ok)


class CountTestCase(unittest.TestCase):

    def test_small_counts(self):
        self.assertEqual(count_labelings(build(FamilySpec.cycle(3))), 6)
        self.assertEqual(count_labelings(build(FamilySpec.cycle(4))), 8)
        self.assertEqual(count_labelings(build(FamilySpec.path(2))), 2)
        self.assertEqual(count_labelings(build_complete(4)), 0)

    def test_static_order(self):
        g = Graph(5, [(0, 3), (3, 1), (2, 4)])
        self.assertEqual(static_order(g), [0, 3, 1, 2, 4])

    def test_matches_brute_force(self):
        for n in range(3, 7):
            for g in enumerate_unicyclic(n):
                self.assertEqual(count_labelings(g), brute_force_count(g), sorted(g.edges))
        for g in (build_complete(4), build_complete(5), build(FamilySpec.star(5))):
            self.assertEqual(count_labelings(g), brute_force_count(g))

    def test_every_yield_is_prime(self):
        g = build(FamilySpec.hairy(3, 1))
        labelings = list(iter_labelings(g))
        self.assertEqual(len(labelings), len(set(labelings)))
        for labeling in labelings:
            self.assertTrue(verify(g, labeling).ok)

    def test_formula_labelings_are_enumerated(self):
        cases = [
            (build(FamilySpec.path(7)), label_path),
            (build(FamilySpec.cycle(7)), label_cycle),
            (build(FamilySpec.star(6)), label_star),
            (build(FamilySpec.hairy(3, 1)), label_hairy_blocks),
            (build(FamilySpec.hairy(4, 1)), label_hairy_blocks),
        ]
        for g, labeler in cases:
            self.assertIn(labeler(g), set(iter_labelings(g)))

    def test_guard(self):
        g = build(FamilySpec.path(11))
        self.assertRaises(SolverError, count_labelings, g)
        self.assertRaises(SolverError, list, iter_labelings(g))
        self.assertRaises(SolverError, count_labelings, build(FamilySpec.path(6)), guard=5)


class BudgetTestCase(unittest.TestCase):

    def test_validation(self):
        self.assertRaises(SolverError, Budget, max_nodes=-1)
        self.assertRaises(SolverError, Budget, max_nodes=True)
        self.assertRaises(SolverError, Budget, max_nodes=1.5)
        self.assertRaises(SolverError, Budget, time_limit=0)
        self.assertRaises(SolverError, Budget, time_limit="1")
        Budget(max_nodes=0, time_limit=0.5)


class SolveTestCase(LabelingAssertions, unittest.TestCase):

    def test_complete_graphs_have_no_labeling(self):
        for n in (4, 5):
            stats = solve(build_complete(n))
            self.assertEqual(stats.outcome, Outcome.no_solution)
            self.assertIsNone(stats.labeling)
            self.assertEqual(stats.to_dict(), {"outcome": "no_solution"})

    def test_hairy_seven(self):
        g = build(FamilySpec.hairy(3, 7))
        stats = solve(g)
        self.assertTrue(stats.found)
        self.assertPrimeLabeling(g, stats.labeling)
        self.assertGreaterEqual(stats.nodes_expanded, g.n)

    def test_families(self):
        for spec in (FamilySpec.cps(3, 1), FamilySpec.cyclepath(4, 2), FamilySpec.weed(3), FamilySpec.star(10)):
            g = build(spec)
            stats = solve(g)
            self.assertTrue(stats.found, spec)
            self.assertPrimeLabeling(g, stats.labeling)

    def test_single_vertex(self):
        stats = solve(Graph(1, []))
        self.assertTrue(stats.found)
        self.assertEqual(stats.labeling.to_list(), [1])

    def test_deterministic(self):
        g = build(FamilySpec.cps(4, 1))
        first, second = solve(g), solve(g)
        self.assertEqual(first.labeling, second.labeling)
        self.assertEqual(first.nodes_expanded, second.nodes_expanded)
        self.assertEqual(first.backtracks, second.backtracks)

    def test_zero_budget(self):
        stats = solve(build(FamilySpec.cycle(3)), Budget(max_nodes=0))
        self.assertEqual(stats.outcome, Outcome.budget_exceeded)
        self.assertEqual(stats.nodes_expanded, 0)
        self.assertIsNone(stats.labeling)

    def test_exact_budget(self):
        g = build(FamilySpec.hairy(3, 5))
        needed = solve(g).nodes_expanded
        self.assertTrue(solve(g, Budget(max_nodes=needed)).found)
        self.assertEqual(solve(g, Budget(max_nodes=needed - 1)).outcome, Outcome.budget_exceeded)
        self.assertTrue(solve(g, Budget(max_nodes=needed * 10)).found)

    def test_exhaustion_beats_budget(self):
        stats = solve(build_complete(4), Budget(max_nodes=10 ** 6))
        self.assertEqual(stats.outcome, Outcome.no_solution)
        self.assertGreater(stats.backtracks, 0)

    def test_stats_dict(self):
        stats = solve(build(FamilySpec.path(3)))
        data = stats.to_dict(include_stats=True)
        self.assertEqual(data["outcome"], "found")
        self.assertEqual(sorted(data["labels"]), [1, 2, 3])
        self.assertEqual(data["nodes_expanded"], stats.nodes_expanded)
        self.assertEqual(data["backtracks"], stats.backtracks)
        self.assertIn("elapsed", data)
        self.assertNotIn("elapsed", stats.to_dict())

    def assertAgreesWithCount(self, n):
        for g in enumerate_unicyclic(n):
            stats = solve(g)
            labelings = set(iter_labelings(g))
            self.assertEqual(stats.found, bool(labelings), sorted(g.edges))
            if stats.found:
                self.assertIn(stats.labeling, labelings)

    def test_agrees_with_count(self):
        for n in range(3, 8):
            self.assertAgreesWithCount(n)

    @pytest.mark.skipif(is_slow_test_hostile(), reason="Enumerates every labeling of each 8 vertex unicyclic graph")
    def test_agrees_with_count_eight(self):
        self.assertAgreesWithCount(8)
