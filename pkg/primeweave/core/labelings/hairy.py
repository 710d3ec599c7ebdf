"""Constructive labelings for hairy cycles ``C_n * S_m`` and Bertrand weeds ``BW_n``.

All of these split ``1, 2, 3, ...`` into consecutive blocks, one per clump. Clump i gets block i, its cycle vertex ``c_i`` takes a block member relatively prime to the rest of the block, and the pendants take whatever is left. The only thing that varies between the families is how the cycle label is picked.

Each labeler accepts either the family size ``n`` or a built graph carrying vertex roles.
"""

import logging
from collections import Counter

from .. import numth
from ..errors import LabelingError
from ..graph.families import Family
from ..graph.families import FamilySpec
from ..graph.model import RoleKind
from .base import bad_role
from .base import cycle_length
from .base import expect_family
from .base import label_by_role
from .base import resolve_target


logger = logging.getLogger(__name__)


#: Offset of ``f(c_i)`` below ``8i``, keyed by ``i mod 15``. Every choice avoids multiples of 3 and 5.
HAIRY7_CYCLE_OFFSET = {
    2: 5, 3: 5, 6: 5, 8: 5, 9: 5, 11: 5, 12: 5, 14: 5,
    4: 3, 5: 3, 7: 3, 10: 3, 13: 3,
    0: 1, 1: 1,
}


def _pendant_counts(g):
    """Clump index -> number of pendants."""
    return Counter(role.i for role in g.roles.values() if role.kind == RoleKind.pendant)


def _check_pendants(g, expected):
    """All non-cycle roles are pendants and clump i has ``expected(i)`` of them."""
    n = cycle_length(g)
    for role in g.roles.values():
        if role.kind not in (RoleKind.cycle, RoleKind.pendant) or role.i > n:
            raise bad_role(role)
        if role.kind == RoleKind.pendant and role.j > expected(role.i):
            raise bad_role(role)
    counts = _pendant_counts(g)
    for i in range(1, n + 1):
        if counts[i] != expected(i):
            raise LabelingError("Clump {} has {} pendants, expected {}".format(i, counts[i], expected(i)))
    return n


def _block_labeling(g, blocks, centers):
    """Cycle vertex i gets ``centers[i]``, pendant j of clump i the j-th smallest other member of ``blocks[i]``."""
    rests = {i: [x for x in block if x != centers[i]] for i, block in blocks.items()}

    def formula(role):
        if role.kind == RoleKind.cycle:
            return centers[role.i]
        return rests[role.i][role.j - 1]

    return label_by_role(g, formula)


def label_hairy3(target):
    """``f(c_1) = 1``, ``f(c_i) = 4i - 1``; pendants of clump 1 get ``j + 1``, others ``4i-3, 4i-2, 4i``."""
    g = resolve_target(target, lambda n: FamilySpec.hairy(n, 3))
    expect_family(g, Family.hairy)
    _check_pendants(g, lambda i: 3)

    def formula(role):
        i, j = role.i, role.j
        if role.kind == RoleKind.cycle:
            return 1 if i == 1 else 4 * i - 1
        if i == 1:
            return j + 1
        return {1: 4 * i - 3, 2: 4 * i - 2, 3: 4 * i}[j]

    return label_by_role(g, formula)


def label_hairy5(target):
    """``f(c_1) = 1``, ``f(c_i) = 6(i-1) + 5``; pendants ``6(i-1) + j`` for j up to 4 and ``6(i-1) + 6`` last."""
    g = resolve_target(target, lambda n: FamilySpec.hairy(n, 5))
    expect_family(g, Family.hairy)
    _check_pendants(g, lambda i: 5)

    def formula(role):
        i, j = role.i, role.j
        base = 6 * (i - 1)
        if role.kind == RoleKind.cycle:
            return 1 if i == 1 else base + 5
        if i == 1:
            return j + 1
        return base + j if j <= 4 else base + 6

    return label_by_role(g, formula)


def hairy7_cycle_label(i):
    """Label of ``c_i`` in ``C_n * S_7``: 1 for the first clump, then the residue table."""
    if i == 1:
        return 1
    return 8 * i - HAIRY7_CYCLE_OFFSET[i % 15]


def label_hairy7(target):
    """Blocks of eight; ``c_i`` takes the 2nd, 3rd or 4th odd member of its block per ``i mod 15``.

    The pendant order within a clump does not matter. We hand out the leftovers ascending.
    """
    g = resolve_target(target, lambda n: FamilySpec.hairy(n, 7))
    expect_family(g, Family.hairy)
    n = _check_pendants(g, lambda i: 7)

    blocks = {i: range(8 * i - 7, 8 * i + 1) for i in range(1, n + 1)}
    centers = {i: hairy7_cycle_label(i) for i in blocks}
    return _block_labeling(g, blocks, centers)


def bertrand_block(i):
    """Labels of clump i in a Bertrand weed: ``2**i - 1 .. 2**(i+1) - 2``."""
    return range(2 ** i - 1, 2 ** (i + 1) - 1)


def label_bertrand_weed(target):
    """Clump i takes :py:func:`bertrand_block` and its cycle vertex the largest prime in the block (1 for clump 1).

    A prime p in that block satisfies ``2p > max(block)``, so no other member is a multiple of it.
    """
    g = resolve_target(target, FamilySpec.weed)
    expect_family(g, Family.weed)
    n = _check_pendants(g, lambda i: 2 ** i - 1)

    blocks = {i: bertrand_block(i) for i in range(1, n + 1)}
    centers = {1: 1}
    for i in range(2, n + 1):
        prime = numth.largest_prime_in_range(2 ** i - 1, 2 ** (i + 1) - 2)
        if prime is None:
            # Bertrand's postulate says this does not happen
            raise LabelingError("No prime in block {}".format(i))
        centers[i] = prime
    return _block_labeling(g, blocks, centers)


def _hairy_pendants_per_clump(g):
    pendants = _pendant_counts(g)
    counts = {pendants[i] for i in range(1, cycle_length(g) + 1)}
    if len(counts) != 1:
        raise LabelingError("Clumps have differing pendant counts {}".format(sorted(counts)))
    return counts.pop()


def label_hairy_blocks(target, m=None):
    """General hairy cycle labeling for any m.

    Clump i gets the block ``(m+1)(i-1)+1 .. (m+1)i``. ``c_1`` takes 1 and every later cycle vertex a coprime center of its block (:py:func:`primeweave.core.numth.coprime_centers`). Consecutive cycle labels must be coprime too. We go around the cycle keeping, for each reachable center, the smallest reachable predecessor, and read the chain back from the smallest reachable final center. ``c_n`` is adjacent to ``c_1 = 1``, which closes the cycle for free.

    :param target: Family size n (then ``m`` is required) or a hairy cycle graph

    :raise LabelingError: Some block is a Pillai window or no coprime chain exists
    """
    if isinstance(target, int) and m is None:
        raise LabelingError("Pendant count m is needed when labeling by size")
    g = resolve_target(target, lambda n: FamilySpec.hairy(n, m))
    expect_family(g, Family.hairy)
    n = cycle_length(g)
    if m is None:
        m = _hairy_pendants_per_clump(g)
    _check_pendants(g, lambda i: m)

    size = m + 1
    blocks = {i: range(size * (i - 1) + 1, size * i + 1) for i in range(1, n + 1)}

    # reachable[i]: center of block i -> chosen center of block i-1
    reachable = {1: {1: None}}
    for i in range(2, n + 1):
        block = blocks[i]
        candidates = numth.coprime_centers(block[0], size)
        if not candidates:
            raise LabelingError("Block {}..{} has no member prime to all the others".format(block[0], block[-1]))
        step = {}
        for candidate in candidates:
            predecessors = [p for p in sorted(reachable[i - 1]) if numth.gcd(p, candidate) == 1]
            if predecessors:
                step[candidate] = predecessors[0]
        if not step:
            raise LabelingError("No coprime cycle label chain through clump {}".format(i))
        reachable[i] = step

    centers = {}
    current = min(reachable[n])
    for i in range(n, 0, -1):
        centers[i] = current
        current = reachable[i][current]

    logger.debug("Hairy m=%d n=%d cycle labels %s", m, n, [centers[i] for i in range(1, n + 1)])
    return _block_labeling(g, blocks, centers)
