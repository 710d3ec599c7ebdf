"""Graph serialization: JSON in and out, DOT out.

JSON layout::

    {
        "n": 3,
        "edges": [[0, 1], [0, 2], [1, 2]],
        "roles": {"0": {"kind": "cycle", "i": 1}, ...},
        "family": {"tag": "cycle", "n": 3}
    }

``roles`` and ``family`` are optional. Edges are written ascending inside each pair and the list is sorted.
"""

import json

import graphviz

from ..errors import GraphError
from ..errors import GraphParseError
from .families import FamilySpec
from .model import Graph
from .model import RoleKind
from .model import ROLE_ARITY
from .model import VertexRole


_INDEX_NAMES = ("i", "j", "k")


def _role_to_dict(role):
    data = {"kind": role.kind.value}
    for name, value in zip(_INDEX_NAMES, role.indices):
        data[name] = value
    return data


def graph_to_dict(g):
    data = {
        "n": g.n,
        "edges": [list(edge) for edge in g.sorted_edges()],
    }
    if g.roles is not None:
        data["roles"] = {str(v): _role_to_dict(g.roles[v]) for v in range(g.n)}
    if g.family is not None:
        data["family"] = g.family.to_dict()
    return data


def serialize_graph(g):
    """Graph to JSON text."""
    return json.dumps(graph_to_dict(g))


def _require_int(data, key, field):
    if key not in data:
        raise GraphParseError(field, "missing")
    value = data[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise GraphParseError(field, "expected an integer, got {!r}".format(value))
    return value


def _parse_role(data, field):
    if not isinstance(data, dict):
        raise GraphParseError(field, "expected an object")
    try:
        kind = RoleKind(data.get("kind"))
    except ValueError:
        raise GraphParseError(field + ".kind", "unknown role kind {!r}".format(data.get("kind"))) from None
    indices = [_require_int(data, name, "{}.{}".format(field, name)) for name in _INDEX_NAMES[:ROLE_ARITY[kind]]]
    indices += [None] * (3 - len(indices))
    return VertexRole(kind, *indices)


def _parse_family(data, field):
    if not isinstance(data, dict):
        raise GraphParseError(field, "expected an object")
    if "tag" not in data:
        raise GraphParseError(field + ".tag", "missing")
    try:
        return FamilySpec(data["tag"], data.get("n"), m=data.get("m"), levels=data.get("levels"))
    except GraphError as e:
        raise GraphParseError(field, str(e)) from e


def graph_from_dict(data):
    """Build a :py:class:`Graph` from already decoded JSON data.

    :raise GraphParseError: Naming the offending field
    """
    if not isinstance(data, dict):
        raise GraphParseError("graph", "expected a JSON object")

    n = _require_int(data, "n", "n")

    raw_edges = data.get("edges")
    if not isinstance(raw_edges, list):
        raise GraphParseError("edges", "expected an array of vertex pairs")
    edges = []
    for index, pair in enumerate(raw_edges):
        field = "edges.{}".format(index)
        if not isinstance(pair, list) or len(pair) != 2 or any(isinstance(x, bool) or not isinstance(x, int) for x in pair):
            raise GraphParseError(field, "expected a pair of integers, got {!r}".format(pair))
        edges.append(tuple(pair))

    roles = None
    if data.get("roles") is not None:
        raw_roles = data["roles"]
        if not isinstance(raw_roles, dict):
            raise GraphParseError("roles", "expected an object keyed by vertex id")
        roles = {}
        for key, value in raw_roles.items():
            field = "roles.{}".format(key)
            try:
                vertex = int(key)
            except ValueError:
                raise GraphParseError(field, "vertex id is not an integer") from None
            roles[vertex] = _parse_role(value, field)

    family = None
    if data.get("family") is not None:
        family = _parse_family(data["family"], "family")

    try:
        return Graph(n, edges, roles=roles, family=family)
    except GraphParseError:
        raise
    except GraphError as e:
        raise GraphParseError("graph", str(e)) from e


def parse_graph(text):
    """JSON text to :py:class:`Graph`."""
    try:
        data = json.loads(text)
    except ValueError as e:
        raise GraphParseError("graph", "not valid JSON: {}".format(e)) from e
    return graph_from_dict(data)


def to_dot(g, labeling=None):
    """Render an undirected DOT document.

    Node ids are the vertex ids. When a labeling is given its labels become the node captions.

    :param labeling: Optional :py:class:`primeweave.core.labelings.base.Labeling` or list of labels
    """
    if labeling is not None and len(labeling) != g.n:
        raise GraphError("Labeling has {} labels for {} vertices".format(len(labeling), g.n))

    name = str(g.family) if g.family is not None else "G"
    dot = graphviz.Graph(name=name, strict=True)
    for v in range(g.n):
        if labeling is None:
            dot.node(str(v))
        else:
            dot.node(str(v), label=str(labeling[v]))
    for u, v in g.sorted_edges():
        dot.edge(str(u), str(v))
    return dot.source
