"""Default logging settings for the command line tool.

Standard output carries the JSON payload, so log records go to standard error.
"""

import os
import logging
import sys

from rainbow_logging_handler import RainbowLoggingHandler


def setup_stderr_logging(verbosity=0, stream=None):
    """
    :param verbosity: 0 warnings only, 1 info, 2 or more debug. The ``VERBOSE`` environment variable also turns on debug.

    :param stream: Where to write, defaults to ``sys.stderr``
    """
    formatter = logging.Formatter("[%(asctime)s] [%(name)s %(funcName)s] %(message)s")

    handler = RainbowLoggingHandler(stream or sys.stderr)
    handler.setFormatter(formatter)
    logger = logging.getLogger()
    logger.handlers = [handler]

    if verbosity >= 2 or "VERBOSE" in os.environ:
        logger.setLevel(logging.DEBUG)
    elif verbosity == 1:
        logger.setLevel(logging.INFO)
    else:
        logger.setLevel(logging.WARNING)

    # Per node solver chatter is too much even for -vv during a scan
    logger = logging.getLogger("primeweave.core.solver.search")
    logger.setLevel(logging.DEBUG if "VERBOSE" in os.environ else logging.INFO)
