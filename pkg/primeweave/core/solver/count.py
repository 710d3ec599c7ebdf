"""Exhaustive enumeration of every prime labeling of a small graph.

This is the oracle the solver is tested against, so it shares no code with :py:mod:`primeweave.core.solver.search`: a fixed breadth-first vertex order, labels tried ascending, gcd checked against the neighbours earlier in that order.
"""

import math
from collections import deque

from .. import defaults
from ..errors import SolverError
from ..labelings.base import Labeling


def static_order(g):
    """Breadth-first vertex order, restarting from the lowest unvisited id for each component."""
    seen = [False] * g.n
    order = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            for u in g.neighbors(v):
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
    return order


def iter_labelings(g, guard=defaults.COUNT_GUARD):
    """Yield every prime labeling of ``g``.

    Labelings come out in lexicographic order of the labels along :py:func:`static_order`.

    :param guard: Largest vertex count accepted, the work grows factorially

    :raise SolverError: Graph above the guard
    """
    if g.n > guard:
        raise SolverError("Refusing to enumerate labelings of {} vertices, guard is {}".format(g.n, guard))

    order = static_order(g)
    position = {v: index for index, v in enumerate(order)}
    # Neighbours that are labeled before v in the static order
    earlier = [[u for u in g.neighbors(v) if position[u] < position[v]] for v in order]

    assignment = [None] * g.n
    used = [False] * (g.n + 1)

    def extend(depth):
        if depth == g.n:
            yield Labeling(assignment)
            return
        v = order[depth]
        for label in range(1, g.n + 1):
            if used[label]:
                continue
            if any(math.gcd(label, assignment[u]) > 1 for u in earlier[depth]):
                continue
            assignment[v] = label
            used[label] = True
            yield from extend(depth + 1)
            used[label] = False
        assignment[v] = None

    yield from extend(0)


def count_labelings(g, guard=defaults.COUNT_GUARD):
    """Number of prime labelings of ``g`` as raw vertex -> label assignments, no symmetry quotient.

    :raise SolverError: Graph above the guard
    """
    return sum(1 for _ in iter_labelings(g, guard=guard))
