"""Exhaustive generation of unicyclic graphs on a few vertices.

A unicyclic graph is a cycle with a rooted forest hanging off the cycle vertices. We lay the cycle out on vertices ``0 .. k-1`` and number the forest vertices in breadth-first order starting from the cycle. In that numbering every forest vertex ``v >= k`` has its parent below ``v``, and the parents never decrease as ``v`` grows. Walking all such parent sequences therefore reaches every unicyclic graph up to isomorphism.

Isomorphic copies do come out (cycle rotations and reflections, sibling swaps). No canonical form is computed.
"""

import logging

from .. import defaults
from ..errors import GraphError
from .model import Graph


logger = logging.getLogger(__name__)


def _parent_sequences(k, n):
    """Yield nondecreasing parent tuples for forest vertices ``k .. n-1``, parent of ``v`` below ``v``."""

    def extend(v, lowest, parents):
        if v == n:
            yield tuple(parents)
            return
        for parent in range(lowest, v):
            parents.append(parent)
            yield from extend(v + 1, parent, parents)
            parents.pop()

    yield from extend(k, 0, [])


def enumerate_unicyclic(n, cap=defaults.ENUMERATION_CAP):
    """Yield unicyclic graphs on ``n`` vertices, every isomorphism class at least once.

    :param n: Vertex count, at least 3

    :param cap: Refuse anything larger than this

    :raise GraphError: n below 3 or above the cap
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 3:
        raise GraphError("Unicyclic graphs need n >= 3, got {!r}".format(n))
    if n > cap:
        raise GraphError("n={} is above the enumeration cap {}".format(n, cap))

    produced = 0
    for k in range(3, n + 1):
        cycle_edges = [(v, (v + 1) % k) for v in range(k)]
        for parents in _parent_sequences(k, n):
            tree_edges = [(parent, k + offset) for offset, parent in enumerate(parents)]
            produced += 1
            yield Graph(n, cycle_edges + tree_edges)

    logger.debug("Enumerated %d unicyclic graphs on %d vertices", produced, n)
