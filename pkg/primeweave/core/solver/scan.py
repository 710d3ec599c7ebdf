"""Desk scale scan of the conjecture that every unicyclic graph has a prime labeling.

For every n the scan runs :py:func:`primeweave.core.solver.search.solve` on each graph from :py:func:`primeweave.core.graph.enumeration.enumerate_unicyclic`. A graph that the solver exhausts without a labeling would be a counterexample. Graphs that run out of budget are only tallied, they prove nothing either way.

Example::

    report = scan_conjecture(8, jobs=4)
    assert not report.counterexamples
"""

import io
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from functools import partial

from .. import defaults
from ..errors import SolverError
from ..graph.codec import graph_to_dict
from ..graph.enumeration import enumerate_unicyclic
from .search import Budget
from .search import Outcome
from .search import solve


logger = logging.getLogger(__name__)


#: Graphs handed to a worker process at a time
CHUNK_SIZE = 64


class ScanTally:
    """Outcome counts for one vertex count."""

    def __init__(self):
        self.scanned = 0
        self.found = 0
        self.budget_exceeded = 0
        self.no_solution = 0

    def add(self, outcome):
        self.scanned += 1
        setattr(self, outcome.value, getattr(self, outcome.value) + 1)

    def to_dict(self):
        return {
            "scanned": self.scanned,
            "found": self.found,
            "budget_exceeded": self.budget_exceeded,
            "no_solution": self.no_solution,
        }


class ScanReport:

    def __init__(self):
        #: n -> :py:class:`ScanTally`
        self.per_n = {}

        #: Graphs the solver proved to have no prime labeling
        self.counterexamples = []

    @property
    def ok(self):
        return not self.counterexamples

    def to_dict(self):
        return {
            "per_n": {str(n): tally.to_dict() for n, tally in sorted(self.per_n.items())},
            "counterexamples": [graph_to_dict(g) for g in self.counterexamples],
        }

    def write(self, fname):
        with io.open(fname, "wt") as f:
            json.dump(self.to_dict(), f, indent=2)
            f.write("\n")


def _scan_one(g, budget):
    """Worker side: outcome name only, the parent still holds the graph."""
    return solve(g, budget).outcome.value


def scan_conjecture(max_n, budget=None, jobs=defaults.JOBS, cap=defaults.ENUMERATION_CAP, results_path=None):
    """Solve every unicyclic graph with ``3 .. max_n`` vertices.

    :param budget: :py:class:`primeweave.core.solver.search.Budget` per graph

    :param jobs: Worker processes. 1 runs everything in this process. The report does not depend on it.

    :param cap: Largest accepted ``max_n``

    :param results_path: Also write the report JSON here

    :return: :py:class:`ScanReport`

    :raise SolverError: max_n outside ``3 .. cap`` or a bad job count
    """
    if isinstance(max_n, bool) or not isinstance(max_n, int) or not 3 <= max_n <= cap:
        raise SolverError("max_n must be in 3..{}, got {!r}".format(cap, max_n))
    if isinstance(jobs, bool) or not isinstance(jobs, int) or jobs < 1:
        raise SolverError("jobs must be a positive integer, got {!r}".format(jobs))

    budget = budget or Budget()
    worker = partial(_scan_one, budget=budget)
    report = ScanReport()

    executor = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for n in range(3, max_n + 1):
            graphs = list(enumerate_unicyclic(n, cap=cap))
            if executor:
                outcomes = executor.map(worker, graphs, chunksize=CHUNK_SIZE)
            else:
                outcomes = map(worker, graphs)

            tally = report.per_n[n] = ScanTally()
            # map() keeps input order, so counterexamples are listed in enumeration order whatever the job count
            for g, value in zip(graphs, outcomes):
                outcome = Outcome(value)
                tally.add(outcome)
                if outcome == Outcome.no_solution:
                    logger.warning("Unicyclic graph without a prime labeling: %s", sorted(g.edges))
                    report.counterexamples.append(g)

            logger.info("n=%d: %d graphs, %d found, %d over budget, %d without labeling", n, tally.scanned, tally.found, tally.budget_exceeded, tally.no_solution)
    finally:
        if executor:
            executor.shutdown()

    if results_path:
        report.write(results_path)

    return report
