"""Which constructive labeler handles which family, and the batch theorem check.

Labelers are looked up by key (``hairy3``, ``cps2``, ...). The defaults live in :py:data:`primeweave.core.defaults.FAMILY_LABELER_DEFAULTS` and any of them can be swapped for your own function from the ``labelers`` configuration section.
"""

import logging

from zope.dottedname.resolve import resolve

from .. import defaults
from ..errors import LabelingError
from ..graph.families import Family
from ..graph.families import FamilySpec
from ..graph.families import build
from .base import verify


logger = logging.getLogger(__name__)


#: Hairy cycles with their own closed formula
FORMULA_HAIRY_M = (3, 5, 7)


def labeler_key(spec):
    """Registry key for a family instance.

    :raise LabelingError: The family has no constructive labeler
    """
    family = spec.family
    if family == Family.hairy:
        return "hairy{}".format(spec.m) if spec.m in FORMULA_HAIRY_M else "hairy"
    if family == Family.cps:
        return "cps{}".format(spec.levels)
    if family == Family.cyclepath:
        raise LabelingError("No constructive labeler for cyclepath graphs, use the solver")
    return family.value


class LabelerRegistry:
    """Holds the labeler functions in use.

    Usually you access this through :py:attr:`primeweave.core.app.PrimeWeaveApp.labelers`.

    Example::

        registry = LabelerRegistry.from_dotted_names(FAMILY_LABELER_DEFAULTS)
        labeling = registry.get("hairy3")(4)
    """

    def __init__(self):
        self.labelers = {}

    @classmethod
    def from_dotted_names(cls, names):
        """
        :param names: Dict key -> dotted name of a callable taking a size or a graph
        """
        registry = cls()
        for key, dotted_name in names.items():
            registry.register(key, resolve(dotted_name))
        return registry

    @classmethod
    def default(cls):
        return cls.from_dotted_names(defaults.FAMILY_LABELER_DEFAULTS)

    def register(self, key, labeler):
        self.labelers[key] = labeler

    def get(self, key):
        """
        :raise LabelingError: Nothing registered under ``key``
        """
        try:
            return self.labelers[key]
        except KeyError:
            raise LabelingError("No labeler registered for {}".format(key)) from None

    def all(self):
        """
        :return: List of tuples(key, labeler function), sorted by key
        """
        return sorted(self.labelers.items())

    def for_spec(self, spec):
        return self.get(labeler_key(spec))


def label_family(spec, registry=None):
    """Build a family graph and label it with the registered labeler.

    :return: tuple (Graph, Labeling)
    """
    registry = registry or LabelerRegistry.default()
    labeler = registry.for_spec(spec)
    g = build(spec)
    return g, labeler(g)


class FamilyCheckResult:
    """Verification outcome for one family instance."""

    def __init__(self, spec, ok, violations=0, error=None):
        self.spec = spec
        self.ok = ok

        #: Number of edges with a shared factor
        self.violations = violations

        #: Message when the labeler refused the instance or produced something that is not a bijection
        self.error = error

    def to_dict(self):
        data = {"n": self.spec.n, "ok": self.ok, "violations": self.violations}
        if self.error:
            data["error"] = self.error
        return data


class FamilyCheckReport:

    def __init__(self, family, m=None, levels=None):
        self.family = family
        self.m = m
        self.levels = levels
        self.results = []

    @property
    def passes(self):
        return sum(1 for result in self.results if result.ok)

    @property
    def failures(self):
        return [result for result in self.results if not result.ok]

    @property
    def ok(self):
        return not self.failures

    def to_dict(self):
        data = {
            "family": self.family.value,
            "passes": self.passes,
            "failures": [result.to_dict() for result in self.failures],
        }
        if self.m is not None:
            data["m"] = self.m
        if self.levels is not None:
            data["levels"] = self.levels
        return data


def _check_instance(spec, labeler):
    g = build(spec)
    try:
        labeling = labeler(g)
    except LabelingError as e:
        return FamilyCheckResult(spec, False, error=str(e))

    report = verify(g, labeling)
    error = None if report.bijection_ok else "labels are not a bijection onto 1..{}".format(g.n)
    return FamilyCheckResult(spec, report.ok, violations=len(report.violations), error=error)


def check_family(family, n_from, n_to, m=None, levels=None, registry=None, vertex_cap=defaults.VERTEX_CAP):
    """Run the constructive labeler and the verifier for every ``n`` in ``n_from .. n_to``.

    Example::

        report = check_family("hairy", 3, 200, m=3)
        assert report.passes == 198

    :param family: :py:class:`Family` or its string value

    :param vertex_cap: Refuse the whole range if its largest instance would have more vertices than this

    :return: :py:class:`FamilyCheckReport`

    :raise DomainError: Unknown family, bad parameters, empty range or a range above the cap
    """
    if n_to < n_from:
        raise LabelingError("Empty range {}..{}".format(n_from, n_to))

    # Validates the family and parameters before anything gets built
    specs = [FamilySpec(family, n, m=m, levels=levels) for n in range(n_from, n_to + 1)]
    largest = specs[-1].vertex_count()
    if largest > vertex_cap:
        raise LabelingError("{} would have {} vertices, above the cap {}".format(specs[-1], largest, vertex_cap))

    registry = registry or LabelerRegistry.default()
    labeler = registry.for_spec(specs[0])

    report = FamilyCheckReport(specs[0].family, m=m, levels=levels)
    for spec in specs:
        result = _check_instance(spec, labeler)
        if not result.ok:
            logger.warning("Labeling check failed for %s: %d violations %s", spec, result.violations, result.error or "")
        report.results.append(result)

    logger.info("Checked %s for n=%d..%d: %d passed, %d failed", report.family.value, n_from, n_to, report.passes, len(report.failures))
    return report

