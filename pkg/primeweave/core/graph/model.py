"""Graph data model.

Vertices are the integers ``0 .. n-1``. Edges are stored as sorted pairs. Graphs built by the family constructors also carry structural vertex roles, which the formula labelers use to address vertices with the 1-based indices ``c_i``, ``p_i^j``, ``s_{i,j}`` and ``l_{i,j,k}``.

Graphs are immutable once constructed and safe to share between threads.
"""

from collections import namedtuple
from enum import Enum

import networkx as nx

from ..errors import GraphError


class RoleKind(Enum):
    """What part of a clump a vertex is."""

    #: Cycle vertex ``c_i``
    cycle = "cycle"

    #: Pendant vertex ``p_i^j`` hanging off the cycle vertex
    pendant = "pendant"

    #: Child ``s_{i,j}`` of the pendant vertex in cycle-pendant-star graphs
    star = "star"

    #: Grandchild ``l_{i,j,k}`` under ``s_{i,j}``
    leaf = "leaf"


#: How many 1-based indices each role kind uses
ROLE_ARITY = {
    RoleKind.cycle: 1,
    RoleKind.pendant: 2,
    RoleKind.star: 2,
    RoleKind.leaf: 3,
}


class VertexRole(namedtuple("VertexRole", ["kind", "i", "j", "k"])):
    """Address of a vertex inside a family construction.

    Use the factory class methods instead of the raw constructor.
    """

    __slots__ = ()

    @classmethod
    def cycle(cls, i):
        return cls(RoleKind.cycle, i, None, None)

    @classmethod
    def pendant(cls, i, j):
        return cls(RoleKind.pendant, i, j, None)

    @classmethod
    def star(cls, i, j):
        return cls(RoleKind.star, i, j, None)

    @classmethod
    def leaf(cls, i, j, k):
        return cls(RoleKind.leaf, i, j, k)

    @property
    def indices(self):
        """The used indices as a tuple, e.g. ``(i, j)`` for a pendant."""
        return (self.i, self.j, self.k)[:ROLE_ARITY[self.kind]]

    def validate(self):
        """Check the role has exactly the indices its kind needs, all positive integers."""
        if not isinstance(self.kind, RoleKind):
            raise GraphError("Unknown role kind {!r}".format(self.kind))
        arity = ROLE_ARITY[self.kind]
        values = (self.i, self.j, self.k)
        for index in values[:arity]:
            if isinstance(index, bool) or not isinstance(index, int) or index < 1:
                raise GraphError("Bad index in role {}".format(self))
        if any(index is not None for index in values[arity:]):
            raise GraphError("Too many indices in role {}".format(self))

    def __str__(self):
        return "{}({})".format(self.kind.value, ",".join(str(x) for x in self.indices))


class Graph:
    """Simple undirected graph with optional vertex roles.

    Example::

        g = Graph(3, [(0, 1), (1, 2), (2, 0)])
        assert g.degree(1) == 2
    """

    def __init__(self, n, edges, roles=None, family=None):
        """
        :param n: Vertex count, vertices are ``0 .. n-1``

        :param edges: Iterable of ``(u, v)`` pairs in any orientation

        :param roles: Optional dict vertex -> :py:class:`VertexRole`, must cover every vertex

        :param family: Optional :py:class:`primeweave.core.graph.families.FamilySpec` this graph was built from

        :raise GraphError: On self-loops, duplicate edges, out of range endpoints or a broken role map
        """
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise GraphError("Vertex count must be a positive integer, got {!r}".format(n))

        normalized = set()
        for edge in edges:
            u, v = edge
            for endpoint in (u, v):
                if isinstance(endpoint, bool) or not isinstance(endpoint, int) or not 0 <= endpoint < n:
                    raise GraphError("Edge {} has endpoint outside 0..{}".format(edge, n - 1))
            if u == v:
                raise GraphError("Self-loop at vertex {}".format(u))
            pair = (min(u, v), max(u, v))
            if pair in normalized:
                raise GraphError("Duplicate edge {}".format(pair))
            normalized.add(pair)

        self.n = n
        self.edges = frozenset(normalized)
        self.roles = None
        self.family = family

        if roles is not None:
            roles = dict(roles)
            if set(roles) != set(range(n)):
                raise GraphError("Role map must cover exactly the vertices 0..{}".format(n - 1))
            for role in roles.values():
                role.validate()
            if len(set(roles.values())) != n:
                raise GraphError("Two vertices share the same role address")
            self.roles = roles

        adjacency = [[] for _ in range(n)]
        for u, v in sorted(self.edges):
            adjacency[u].append(v)
            adjacency[v].append(u)
        self._adjacency = tuple(tuple(sorted(neighbors)) for neighbors in adjacency)
        self._role_index = None

    @property
    def has_roles(self):
        return self.roles is not None

    def neighbors(self, v):
        """Neighbors of ``v`` in ascending order."""
        return self._adjacency[v]

    def degree(self, v):
        return len(self._adjacency[v])

    def sorted_edges(self):
        """Edges as a lexicographically sorted list of ascending pairs."""
        return sorted(self.edges)

    def vertex_of(self, role):
        """Reverse role lookup.

        :return: Vertex id carrying ``role``, or None
        """
        if self.roles is None:
            return None
        if self._role_index is None:
            self._role_index = {r: v for v, r in self.roles.items()}
        return self._role_index.get(role)

    def to_networkx(self):
        """Copy this graph to a ``networkx.Graph``."""
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n, self.edges, self.roles, self.family) == (other.n, other.edges, other.roles, other.family)

    def __hash__(self):
        return hash((self.n, self.edges))

    def __getstate__(self):
        # The reverse role index is rebuilt lazily on the other side of a process pool
        state = self.__dict__.copy()
        state["_role_index"] = None
        return state

    def __repr__(self):
        name = self.family if self.family is not None else "graph"
        return "<Graph {} n={} edges={}>".format(name, self.n, len(self.edges))


def is_connected(g):
    return nx.is_connected(g.to_networkx())


def is_unicyclic(g):
    """True if the graph is connected and has exactly as many edges as vertices.

    That is the same as having exactly one cycle.
    """
    return len(g.edges) == g.n and is_connected(g)
