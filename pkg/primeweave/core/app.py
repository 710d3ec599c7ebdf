"""primeweave application state: resolved limits and the labeler registry."""

from . import defaults
from .labelings.registry import LabelerRegistry
from .solver.search import Budget


class Limits:
    """Caps and budgets in effect. Filled from :py:mod:`primeweave.core.defaults`, then the ``limits`` configuration section."""

    #: Names accepted in the ``limits`` section
    FIELDS = ("enumeration_cap", "count_guard", "max_nodes", "time_limit", "vertex_cap", "jobs")

    def __init__(self):
        self.enumeration_cap = defaults.ENUMERATION_CAP
        self.count_guard = defaults.COUNT_GUARD
        self.max_nodes = defaults.MAX_NODES
        self.time_limit = defaults.TIME_LIMIT
        self.vertex_cap = defaults.VERTEX_CAP
        self.jobs = defaults.JOBS

    def budget(self):
        """Per graph solver budget."""
        return Budget(max_nodes=self.max_nodes, time_limit=self.time_limit)

    def to_dict(self):
        return {name: getattr(self, name) for name in self.FIELDS}


class PrimeWeaveApp:
    """This class ties the configurable parts together.

    Example::

        app = PrimeWeaveApp()
        Configurator(app).load_yaml_file("primeweave.yaml")
        labeler = app.labelers.get("hairy7")
    """

    def __init__(self):
        self.limits = Limits()

        #: :py:class:`primeweave.core.labelings.registry.LabelerRegistry` instance
        self.labelers = LabelerRegistry.default()

        #: Full parsed configuration as a Python dict, set by the configurator
        self.config = None
