"""Backtracking search, exhaustive counting and the unicyclic conjecture scan."""

from .search import Budget  # noqa
from .search import Outcome  # noqa
from .search import SearchStats  # noqa
from .search import solve  # noqa
from .count import count_labelings  # noqa
from .count import iter_labelings  # noqa
from .scan import ScanReport  # noqa
from .scan import scan_conjecture  # noqa
