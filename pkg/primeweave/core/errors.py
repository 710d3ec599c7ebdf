"""Exception hierarchy shared by the library modules."""


class DomainError(Exception):
    """Input falls outside the domain of a library operation.

    Subclassed per module. The command line tool turns any of these into exit code 2.
    """


class NumberTheoryError(DomainError):
    """Bad integer input for :py:mod:`primeweave.core.numth`."""


class GraphError(DomainError):
    """Graph or family parameters do not make sense.

    :param param: Name of the offending family parameter (``n``, ``m``, ``levels``) when there is one
    """

    def __init__(self, message, param=None):
        self.param = param
        super().__init__(message)


class GraphParseError(GraphError):
    """Serialized graph could not be read.

    :param field: Dotted path of the offending JSON field, e.g. ``roles.5.kind``
    """

    def __init__(self, field, message):
        self.field = field
        super().__init__("{}: {}".format(field, message))


class LabelingError(DomainError):
    """Labeling cannot be produced or checked for the given input."""


class SolverError(DomainError):
    """Search request exceeds a guard or is malformed."""
