"""Labelings and the prime labeling verifier.

A prime vertex labeling of an n-vertex graph is a bijection ``f: V -> {1, ..., n}`` where every edge ``uv`` has ``gcd(f(u), f(v)) == 1``. :py:func:`verify` is the single source of truth for that definition. Everything else in the package, formula labelers and the solver alike, is checked against it.
"""

import math
from collections import namedtuple

from ..errors import LabelingError
from ..graph.families import build
from ..graph.model import Graph
from ..graph.model import RoleKind


class Labeling:
    """Vertex id -> label assignment.

    Construction only checks that labels are integers. Zero, negative and repeated labels are kept, whether they form a bijection onto ``1 .. n`` is for :py:func:`verify` to report.
    """

    def __init__(self, assignment):
        assignment = tuple(assignment)
        for label in assignment:
            if isinstance(label, bool) or not isinstance(label, int):
                raise LabelingError("Labels must be integers, got {!r}".format(label))
        self.assignment = assignment

    @property
    def n(self):
        return len(self.assignment)

    def to_list(self):
        return list(self.assignment)

    def is_bijection(self):
        return sorted(self.assignment) == list(range(1, self.n + 1))

    def __len__(self):
        return len(self.assignment)

    def __getitem__(self, v):
        return self.assignment[v]

    def __iter__(self):
        return iter(self.assignment)

    def __eq__(self, other):
        if isinstance(other, Labeling):
            return self.assignment == other.assignment
        return NotImplemented

    def __hash__(self):
        return hash(self.assignment)

    def __repr__(self):
        return "Labeling({})".format(list(self.assignment))


#: One offending edge: endpoints, their labels and the shared factor
Violation = namedtuple("Violation", ["u", "v", "lu", "lv", "gcd"])


class VerifyReport:
    """Outcome of :py:func:`verify`."""

    def __init__(self, bijection_ok, violations):
        #: Labels are exactly ``1 .. n``
        self.bijection_ok = bijection_ok

        #: List of :py:data:`Violation`, edge order
        self.violations = violations

    @property
    def ok(self):
        """Is this a prime labeling."""
        return self.bijection_ok and not self.violations

    def to_dict(self):
        return {
            "bijection_ok": self.bijection_ok,
            "violations": [violation._asdict() for violation in self.violations],
        }

    def __repr__(self):
        return "<VerifyReport bijection_ok={} violations={}>".format(self.bijection_ok, len(self.violations))


def verify(g, labeling):
    """Check a labeling against the prime labeling definition.

    :param g: :py:class:`primeweave.core.graph.model.Graph`

    :param labeling: :py:class:`Labeling` or a plain sequence of labels

    :return: :py:class:`VerifyReport` listing every edge whose labels share a factor

    :raise LabelingError: Labeling length differs from the vertex count
    """
    if not isinstance(labeling, Labeling):
        labeling = Labeling(labeling)
    if labeling.n != g.n:
        raise LabelingError("Labeling has {} labels but the graph has {} vertices".format(labeling.n, g.n))

    violations = []
    for u, v in g.sorted_edges():
        lu, lv = labeling[u], labeling[v]
        common = math.gcd(lu, lv)
        if common > 1:
            violations.append(Violation(u, v, lu, lv, common))

    return VerifyReport(labeling.is_bijection(), violations)


def resolve_target(target, family_spec_factory):
    """Turn a labeler argument into a graph with roles.

    :param target: Either a family size ``n`` or an already built :py:class:`Graph`

    :param family_spec_factory: Callable n -> :py:class:`FamilySpec` for the int case
    """
    if isinstance(target, Graph):
        if not target.has_roles:
            raise LabelingError("Graph has no vertex roles, formula labelers cannot address its vertices")
        return target
    return build(family_spec_factory(target))


def expect_family(g, *accepted):
    """Refuse graphs that announce some other family than the labeler handles."""
    if g.family is not None and g.family.family not in accepted:
        raise LabelingError("Labeler does not handle {} graphs".format(g.family))


def cycle_length(g):
    """Number of ``Cycle(i)`` roles, that is n of the family."""
    return sum(1 for role in g.roles.values() if role.kind == RoleKind.cycle)


def label_by_role(g, formula):
    """Evaluate ``formula(role) -> label`` for every vertex of a graph with roles."""
    return Labeling(formula(g.roles[v]) for v in range(g.n))


def bad_role(role):
    return LabelingError("Vertex role {} does not belong to this family".format(role))

