"""Python logging setup for unit test runs.

Tests that exercise the scan and the batch checks produce a lot of INFO chatter. Keep stderr quiet unless ``VERBOSE_TEST`` is set.
"""

import os
import logging
import sys

from rainbow_logging_handler import RainbowLoggingHandler


#: Loggers that stay at WARNING even when the root is opened up with VERBOSE_TEST
NOISY_LOGGERS = ("primeweave.core.solver.search", "primeweave.core.labelings.hairy")


def setup():
    verbose = "VERBOSE_TEST" in os.environ

    handler = RainbowLoggingHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("[%(asctime)s] %(name)s %(funcName)s():%(lineno)d\t%(message)s"))
    root = logging.getLogger()
    root.handlers = [handler]
    root.setLevel(logging.DEBUG if verbose else logging.ERROR)

    # One debug line per solve() call
    for name in NOISY_LOGGERS:
        logging.getLogger(name).setLevel(logging.WARNING if verbose else logging.ERROR)
