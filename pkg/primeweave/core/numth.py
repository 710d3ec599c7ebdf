"""Exact integer number theory for the labelers, the verifier and the Pillai scan.

All functions are pure. Primality is deterministic trial division, which is plenty for the label ranges we deal with (a few million at most).
"""

import logging
import math
from collections import namedtuple

from .errors import NumberTheoryError


logger = logging.getLogger(__name__)


#: A run of ``length`` consecutive integers beginning at ``start`` where no element is relatively prime to all the others
PillaiRun = namedtuple("PillaiRun", ["start", "length"])


def _check_integer(name, value, minimum):
    # bool is an int subclass, but True is not a label
    if isinstance(value, bool) or not isinstance(value, int):
        raise NumberTheoryError("{} must be an integer, got {!r}".format(name, value))
    if value < minimum:
        raise NumberTheoryError("{} must be >= {}, got {}".format(name, minimum, value))


def gcd(a, b):
    """Greatest common divisor of two nonnegative integers.

    :raise NumberTheoryError: If both arguments are zero or either one is negative
    """
    _check_integer("a", a, 0)
    _check_integer("b", b, 0)
    if a == 0 and b == 0:
        raise NumberTheoryError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def is_prime(n):
    """Deterministic primality test by trial division up to the square root."""
    _check_integer("n", n, 0)
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False

    # Remaining candidate divisors are of the form 6k +- 1
    limit = math.isqrt(n)
    divisor = 5
    while divisor <= limit:
        if n % divisor == 0 or n % (divisor + 2) == 0:
            return False
        divisor += 6
    return True


def largest_prime_in_range(lo_exclusive, hi_inclusive):
    """Find the largest prime p with ``lo_exclusive < p <= hi_inclusive``.

    For the doubling blocks ``(2**i - 1, 2**(i+1) - 2]`` Bertrand's postulate promises an answer.

    :return: The prime or None if the interval holds no prime
    """
    _check_integer("lo_exclusive", lo_exclusive, 1)
    _check_integer("hi_inclusive", hi_inclusive, 2)
    if hi_inclusive <= lo_exclusive:
        raise NumberTheoryError("Empty interval ({}, {}]".format(lo_exclusive, hi_inclusive))

    for candidate in range(hi_inclusive, lo_exclusive, -1):
        if is_prime(candidate):
            return candidate
    return None


def _has_partner(x, start, stop):
    """Does ``x`` share a factor with some other member of ``range(start, stop)``."""
    for y in range(start, stop):
        if y != x and math.gcd(x, y) > 1:
            return True
    return False


def coprime_centers(start, length):
    """List the members of a window that are relatively prime to all the other members.

    In a hairy cycle every clump gets a block of consecutive labels and the cycle vertex needs one of these centers.

    :param start: First integer of the window

    :param length: Window size

    :return: Ascending list, empty for a Pillai window
    """
    _check_integer("start", start, 1)
    _check_integer("length", length, 2)
    stop = start + length
    return [x for x in range(start, stop) if not _has_partner(x, start, stop)]


def window_is_pillai(start, m):
    """Check if no member of ``{start, ..., start + m - 1}`` is prime to all the rest.

    Plain pairwise gcd over the window. We bail out on the first member without a partner.
    """
    _check_integer("start", start, 1)
    _check_integer("m", m, 2)
    stop = start + m
    return all(_has_partner(x, start, stop) for x in range(start, stop))


def find_pillai_run(m, limit):
    """Scan ``start = 1, 2, ..., limit`` for the first Pillai window of length ``m``.

    Not finding anything proves nothing about larger starts.

    :return: :py:data:`PillaiRun` or None
    """
    _check_integer("m", m, 2)
    _check_integer("limit", limit, 1)

    for start in range(1, limit + 1):
        if window_is_pillai(start, m):
            logger.debug("Pillai window of length %d found at %d", m, start)
            return PillaiRun(start, m)

    logger.debug("No Pillai window of length %d starting at or below %d", m, limit)
    return None
