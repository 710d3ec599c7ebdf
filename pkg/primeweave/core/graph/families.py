"""Constructors for the graph families.

Each clump is allocated a consecutive run of vertex ids: the cycle vertex first, then the tree hanging off it in ``(j, k)`` lexicographic order. For the two-level cycle-pendant star this means ``c_i, p_i, s_{i,1}, l_{i,1,1..3}, s_{i,2}, ...``.

Example::

    from primeweave.core.graph.families import FamilySpec, build

    g = build(FamilySpec.hairy(4, 3))
    assert g.n == 16
"""

from enum import Enum

from ..errors import GraphError
from .model import Graph
from .model import VertexRole


class Family(Enum):
    """Supported families. Values double as command line names."""

    path = "path"
    cycle = "cycle"
    star = "star"

    #: ``C_n * S_m``, m pendants on every cycle vertex
    hairy = "hairy"

    #: Bertrand weed ``BW_n``, cycle vertex i carries ``2**i - 1`` pendants
    weed = "weed"

    #: ``C_n * P_2 * S_3`` (levels=1) or ``C_n * P_2 * S_3 * S_3`` (levels=2)
    cps = "cps"

    #: ``C_n * P_m``, a path of m new vertices hanging off every cycle vertex
    cyclepath = "cyclepath"


def _positive(value):
    return not isinstance(value, bool) and isinstance(value, int) and value >= 1


class FamilySpec:
    """A family tag plus its integer parameters."""

    def __init__(self, family, n, m=None, levels=None):
        """
        :param family: :py:class:`Family` or its string value

        :raise GraphError: Unknown family or parameters out of range
        """
        try:
            self.family = Family(family)
        except ValueError:
            raise GraphError("Unknown family {!r}".format(family)) from None
        self.n = n
        self.m = m
        self.levels = levels
        self.validate()

    @classmethod
    def path(cls, n):
        return cls(Family.path, n)

    @classmethod
    def cycle(cls, n):
        return cls(Family.cycle, n)

    @classmethod
    def star(cls, n):
        return cls(Family.star, n)

    @classmethod
    def hairy(cls, n, m):
        return cls(Family.hairy, n, m=m)

    @classmethod
    def weed(cls, n):
        return cls(Family.weed, n)

    @classmethod
    def cps(cls, n, levels):
        return cls(Family.cps, n, levels=levels)

    @classmethod
    def cyclepath(cls, n, m):
        return cls(Family.cyclepath, n, m=m)

    def validate(self):
        family = self.family
        if not _positive(self.n):
            raise GraphError("n must be a positive integer, got {!r}".format(self.n), param="n")

        minimum_n = {Family.path: 2, Family.star: 1}.get(family, 3)
        if self.n < minimum_n:
            raise GraphError("{} needs n >= {}, got {}".format(family.value, minimum_n, self.n), param="n")

        if family in (Family.hairy, Family.cyclepath):
            if not _positive(self.m):
                raise GraphError("{} needs m >= 1, got {!r}".format(family.value, self.m), param="m")
        elif self.m is not None:
            raise GraphError("{} takes no m parameter".format(family.value), param="m")

        if family == Family.cps:
            if self.levels not in (1, 2) or isinstance(self.levels, bool):
                raise GraphError("cps needs levels 1 or 2, got {!r}".format(self.levels), param="levels")
        elif self.levels is not None:
            raise GraphError("{} takes no levels parameter".format(family.value), param="levels")

    def clump_size(self, i):
        """Vertices in clump i (1-based) for the cycle based families."""
        family = self.family
        if family in (Family.hairy, Family.cyclepath):
            return self.m + 1
        if family == Family.weed:
            return 2 ** i
        if family == Family.cps:
            return 5 if self.levels == 1 else 14
        if family == Family.cycle:
            return 1
        raise GraphError("{} has no clumps".format(family.value))

    def vertex_count(self):
        """Closed form vertex count, without building the graph."""
        if self.family == Family.path:
            return self.n
        if self.family == Family.star:
            return self.n + 1
        if self.family == Family.weed:
            return 2 ** (self.n + 1) - 2
        return self.n * self.clump_size(1)

    def to_dict(self):
        data = {"tag": self.family.value, "n": self.n}
        if self.m is not None:
            data["m"] = self.m
        if self.levels is not None:
            data["levels"] = self.levels
        return data

    def __eq__(self, other):
        if not isinstance(other, FamilySpec):
            return NotImplemented
        return (self.family, self.n, self.m, self.levels) == (other.family, other.n, other.m, other.levels)

    def __hash__(self):
        return hash((self.family, self.n, self.m, self.levels))

    def __str__(self):
        params = ", ".join("{}={}".format(k, v) for k, v in sorted(self.to_dict().items()) if k != "tag")
        return "{}({})".format(self.family.value, params)

    __repr__ = __str__


class _ClumpBuilder:
    """Collect vertices and edges while allocating ids in order."""

    def __init__(self):
        self.edges = []
        self.roles = {}

    def add(self, role, parent=None):
        v = len(self.roles)
        self.roles[v] = role
        if parent is not None:
            self.edges.append((parent, v))
        return v

    def close_cycle(self, cycle_vertices):
        count = len(cycle_vertices)
        for index in range(count):
            self.edges.append((cycle_vertices[index], cycle_vertices[(index + 1) % count]))

    def graph(self, spec):
        return Graph(len(self.roles), self.edges, roles=self.roles, family=spec)


def build_path(n):
    return Graph(n, [(v, v + 1) for v in range(n - 1)], family=FamilySpec.path(n))


def build_star(n):
    """Star ``S_n``: center 0 and leaves ``1 .. n``."""
    return Graph(n + 1, [(0, v) for v in range(1, n + 1)], family=FamilySpec.star(n))


def build_cycle(n):
    spec = FamilySpec.cycle(n)
    builder = _ClumpBuilder()
    builder.close_cycle([builder.add(VertexRole.cycle(i)) for i in range(1, n + 1)])
    return builder.graph(spec)


def _build_pendant_cycle(spec, pendants_of):
    builder = _ClumpBuilder()
    cycle = []
    for i in range(1, spec.n + 1):
        c = builder.add(VertexRole.cycle(i))
        cycle.append(c)
        for j in range(1, pendants_of(i) + 1):
            builder.add(VertexRole.pendant(i, j), parent=c)
    builder.close_cycle(cycle)
    return builder.graph(spec)


def build_hairy_cycle(n, m):
    spec = FamilySpec.hairy(n, m)
    return _build_pendant_cycle(spec, lambda i: m)


def build_bertrand_weed(n):
    spec = FamilySpec.weed(n)
    return _build_pendant_cycle(spec, lambda i: 2 ** i - 1)


def build_cycle_path(n, m):
    """``C_n * P_m``: ``Pendant(i, j)`` is the vertex j steps away from ``c_i``."""
    spec = FamilySpec.cyclepath(n, m)
    builder = _ClumpBuilder()
    cycle = []
    for i in range(1, n + 1):
        previous = builder.add(VertexRole.cycle(i))
        cycle.append(previous)
        for j in range(1, m + 1):
            previous = builder.add(VertexRole.pendant(i, j), parent=previous)
    builder.close_cycle(cycle)
    return builder.graph(spec)


def build_cycle_pendant_star(n, levels):
    spec = FamilySpec.cps(n, levels)
    builder = _ClumpBuilder()
    cycle = []
    for i in range(1, n + 1):
        c = builder.add(VertexRole.cycle(i))
        cycle.append(c)
        p = builder.add(VertexRole.pendant(i, 1), parent=c)
        for j in range(1, 4):
            s = builder.add(VertexRole.star(i, j), parent=p)
            if levels == 2:
                for k in range(1, 4):
                    builder.add(VertexRole.leaf(i, j, k), parent=s)
    builder.close_cycle(cycle)
    return builder.graph(spec)


def build_complete(n):
    """Complete graph ``K_n``. Not a labeled family, used for the known negative cases."""
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


_BUILDERS = {
    Family.path: lambda spec: build_path(spec.n),
    Family.cycle: lambda spec: build_cycle(spec.n),
    Family.star: lambda spec: build_star(spec.n),
    Family.hairy: lambda spec: build_hairy_cycle(spec.n, spec.m),
    Family.weed: lambda spec: build_bertrand_weed(spec.n),
    Family.cyclepath: lambda spec: build_cycle_path(spec.n, spec.m),
    Family.cps: lambda spec: build_cycle_pendant_star(spec.n, spec.levels),
}


def build(spec):
    """Build the graph described by a :py:class:`FamilySpec`, roles included."""
    spec.validate()
    return _BUILDERS[spec.family](spec)
