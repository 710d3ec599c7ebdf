"""Backtracking search for a prime labeling of an arbitrary graph.

Variables are vertices, values are the labels ``1 .. n``, and the only constraints are "all different" and "adjacent labels coprime".

* Variable order: fewest labels still consistent with the labeled neighbours first, then most labeled neighbours, then higher degree, then lower vertex id. A vertex with nothing left is picked at once and fails immediately.

* Value order: unused labels ascending.

* Consistency: a label is tried only against the neighbours already labeled.

The search is an explicit stack, so the deepest graphs do not hit the recursion limit. Runs are deterministic: the same graph and budget always give the same labeling and the same counters.
"""

import logging
import math
import time
from enum import Enum

from .. import defaults
from ..errors import SolverError
from ..labelings.base import Labeling


logger = logging.getLogger(__name__)


#: Look at the clock only every this many expansions
CLOCK_CHECK_INTERVAL = 1024


class Outcome(Enum):
    """How a search run ended. Values are the JSON names."""

    found = "found"

    #: The whole search tree was explored, the graph has no prime labeling
    no_solution = "no_solution"

    #: Node or time limit hit before a decision
    budget_exceeded = "budget_exceeded"


class Budget:
    """Limits for one :py:func:`solve` run."""

    def __init__(self, max_nodes=defaults.MAX_NODES, time_limit=defaults.TIME_LIMIT):
        """
        :param max_nodes: Label assignments allowed

        :param time_limit: Wall clock seconds or None
        """
        if isinstance(max_nodes, bool) or not isinstance(max_nodes, int) or max_nodes < 0:
            raise SolverError("max_nodes must be a nonnegative integer, got {!r}".format(max_nodes))
        if time_limit is not None and (isinstance(time_limit, bool) or not isinstance(time_limit, (int, float)) or time_limit <= 0):
            raise SolverError("time_limit must be a positive number of seconds, got {!r}".format(time_limit))
        self.max_nodes = max_nodes
        self.time_limit = time_limit

    def __repr__(self):
        return "<Budget max_nodes={} time_limit={}>".format(self.max_nodes, self.time_limit)


class SearchStats:
    """What a :py:func:`solve` run found and what it cost."""

    def __init__(self, outcome, labeling=None, nodes_expanded=0, backtracks=0, elapsed=0.0):
        self.outcome = outcome

        #: :py:class:`Labeling` when the outcome is found, otherwise None
        self.labeling = labeling

        self.nodes_expanded = nodes_expanded
        self.backtracks = backtracks

        #: Seconds, wall clock
        self.elapsed = elapsed

    @property
    def found(self):
        return self.outcome == Outcome.found

    def to_dict(self, include_stats=False):
        """
        :param include_stats: Add counters and elapsed time. Off by default so the payload is stable between runs.
        """
        data = {"outcome": self.outcome.value}
        if self.labeling is not None:
            data["labels"] = self.labeling.to_list()
        if include_stats:
            data["nodes_expanded"] = self.nodes_expanded
            data["backtracks"] = self.backtracks
            data["elapsed"] = round(self.elapsed, 6)
        return data

    def __repr__(self):
        return "<SearchStats {} nodes={} backtracks={}>".format(self.outcome.value, self.nodes_expanded, self.backtracks)


class _Search:
    """Mutable state of one run."""

    def __init__(self, g):
        self.g = g
        self.n = g.n
        self.assignment = [None] * g.n
        self.used = [False] * (g.n + 1)

    def consistent(self, v, label):
        assignment = self.assignment
        for u in self.g.neighbors(v):
            other = assignment[u]
            if other is not None and math.gcd(label, other) > 1:
                return False
        return True

    def next_label(self, v, after):
        """Smallest unused label above ``after`` that fits ``v``, or None."""
        for label in range(after + 1, self.n + 1):
            if not self.used[label] and self.consistent(v, label):
                return label
        return None

    def select(self):
        """Pick the next vertex to label, None once every vertex has a label."""
        g = self.g
        assignment = self.assignment
        free_labels = [label for label in range(1, self.n + 1) if not self.used[label]]

        best_key = None
        best = None
        for v in range(self.n):
            if assignment[v] is not None:
                continue
            labeled = [assignment[u] for u in g.neighbors(v) if assignment[u] is not None]
            remaining = sum(1 for label in free_labels if all(math.gcd(label, other) == 1 for other in labeled))
            key = (remaining, -len(labeled), -g.degree(v), v)
            if best_key is None or key < best_key:
                best_key, best = key, v
                if remaining == 0:
                    break
        return best

    def assign(self, v, label):
        self.assignment[v] = label
        self.used[label] = True

    def unassign(self, v):
        label = self.assignment[v]
        if label is not None:
            self.used[label] = False
            self.assignment[v] = None


def solve(g, budget=None):
    """Search for a prime labeling.

    Example::

        stats = solve(build(FamilySpec.hairy(3, 7)))
        assert stats.outcome == Outcome.found

    :param g: :py:class:`primeweave.core.graph.model.Graph`

    :param budget: :py:class:`Budget`, default limits when None

    :return: :py:class:`SearchStats`. Running out of budget is an outcome, not an exception.
    """
    budget = budget or Budget()
    started = time.monotonic()
    deadline = started + budget.time_limit if budget.time_limit is not None else None

    search = _Search(g)
    nodes = 0
    backtracks = 0

    def finish(outcome, labeling=None):
        stats = SearchStats(outcome, labeling, nodes, backtracks, time.monotonic() - started)
        logger.debug("Solved %r: %r", g, stats)
        return stats

    # Each frame is [vertex, label currently tried]
    stack = [[search.select(), 0]]
    while stack:
        frame = stack[-1]
        v, last = frame
        search.unassign(v)

        label = search.next_label(v, last)
        if label is None:
            stack.pop()
            backtracks += 1
            continue

        if nodes >= budget.max_nodes:
            return finish(Outcome.budget_exceeded)
        if deadline is not None and nodes % CLOCK_CHECK_INTERVAL == 0 and time.monotonic() > deadline:
            return finish(Outcome.budget_exceeded)

        frame[1] = label
        search.assign(v, label)
        nodes += 1

        following = search.select()
        if following is None:
            return finish(Outcome.found, Labeling(search.assignment))
        stack.append([following, 0])

    return finish(Outcome.no_solution)
