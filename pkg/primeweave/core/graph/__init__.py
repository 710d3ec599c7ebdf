"""Graph model, family constructors, unicyclic enumeration and serialization."""

from .model import Graph  # noqa
from .model import RoleKind  # noqa
from .model import VertexRole  # noqa
from .model import is_connected  # noqa
from .model import is_unicyclic  # noqa
from .families import Family  # noqa
from .families import FamilySpec  # noqa
from .families import build  # noqa
from .families import build_complete  # noqa
from .enumeration import enumerate_unicyclic  # noqa
from .codec import parse_graph  # noqa
from .codec import serialize_graph  # noqa
from .codec import to_dot  # noqa
