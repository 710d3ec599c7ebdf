"""Textbook prime labelings for paths, cycles and stars.

* Path: labels ``1 .. n`` in path order

* Cycle: labels ``1 .. n`` around the cycle, so 1 and n end up adjacent

* Star: the center gets 1, the leaves get ``2 .. n+1`` ascending by vertex id

Paths and stars carry no vertex roles, so given a graph we walk its structure instead.
"""

from ..errors import LabelingError
from ..graph.families import Family
from ..graph.families import build_cycle
from ..graph.families import build_path
from ..graph.families import build_star
from ..graph.model import Graph
from ..graph.model import RoleKind
from ..graph.model import is_connected
from .base import Labeling
from .base import expect_family


def _walk(g, start):
    """Order of vertices along a path or around a cycle, from ``start`` towards its lowest neighbor."""
    order = [start]
    previous, current = None, start
    while True:
        following = [v for v in g.neighbors(current) if v != previous and v != start]
        if not following:
            return order
        previous, current = current, following[0]
        order.append(current)


def _labels_in_order(g, order):
    labels = [0] * g.n
    for label, v in enumerate(order, start=1):
        labels[v] = label
    return Labeling(labels)


def label_path(target):
    """
    :param target: Path length n or a path :py:class:`Graph`
    """
    g = target if isinstance(target, Graph) else build_path(target)
    expect_family(g, Family.path)
    if len(g.edges) != g.n - 1 or not is_connected(g) or any(g.degree(v) > 2 for v in range(g.n)):
        raise LabelingError("Graph is not a path")
    start = min(v for v in range(g.n) if g.degree(v) <= 1)
    return _labels_in_order(g, _walk(g, start))


def label_cycle(target):
    """
    :param target: Cycle length n or a cycle :py:class:`Graph`
    """
    g = target if isinstance(target, Graph) else build_cycle(target)
    expect_family(g, Family.cycle)
    if g.n < 3 or len(g.edges) != g.n or not is_connected(g) or any(g.degree(v) != 2 for v in range(g.n)):
        raise LabelingError("Graph is not a cycle")

    if g.has_roles:
        if any(role.kind != RoleKind.cycle or role.i > g.n for role in g.roles.values()):
            raise LabelingError("Cycle graph roles must be Cycle(1..n)")
        return Labeling(g.roles[v].i for v in range(g.n))

    return _labels_in_order(g, _walk(g, 0))


def label_star(target):
    """
    :param target: Star size n (n leaves) or a star :py:class:`Graph`
    """
    g = target if isinstance(target, Graph) else build_star(target)
    expect_family(g, Family.star)
    center = max(range(g.n), key=lambda v: (g.degree(v), -v))
    if g.degree(center) != g.n - 1 or len(g.edges) != g.n - 1:
        raise LabelingError("Graph is not a star")

    labels = [0] * g.n
    labels[center] = 1
    leaves = [v for v in range(g.n) if v != center]
    for label, v in enumerate(leaves, start=2):
        labels[v] = label
    return Labeling(labels)
