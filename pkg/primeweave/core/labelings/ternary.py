"""Cycle-pendant stars: ``C_n * P_2 * S_3`` (one ternary level) and ``C_n * P_2 * S_3 * S_3`` (two levels).

Clump i takes the block ``5i-4 .. 5i`` or ``14i-13 .. 14i``. The cycle labels ``5i-4`` and ``14i-13`` step by 5 and by 14 around the cycle. The first are all 1 mod 5, the second odd and 1 mod 7, so neighbouring cycle vertices never share a factor.
"""

from ..errors import LabelingError
from ..graph.families import Family
from ..graph.families import FamilySpec
from ..graph.model import RoleKind
from .base import bad_role
from .base import cycle_length
from .base import expect_family
from .base import label_by_role
from .base import resolve_target


#: ``(pendant, stars, leaves under each star)`` as offsets from ``14i``, for ``i mod 3`` in (1, 2)
CPS2_CLUMP_UNLESS_THIRD = (-12, (-9, -5, -3), ((-11, -10, -8), (-7, -6, -4), (-2, -1, 0)))

#: Same for ``i mod 3 == 0``
CPS2_CLUMP_EVERY_THIRD = (-10, (-11, -7, -1), ((-12, -9, -8), (-6, -5, -4), (-3, -2, 0)))


def _check_cps_roles(g, levels):
    n = cycle_length(g)
    allowed = {RoleKind.cycle, RoleKind.pendant, RoleKind.star}
    if levels == 2:
        allowed.add(RoleKind.leaf)

    for role in g.roles.values():
        if role.kind not in allowed or role.i > n:
            raise bad_role(role)
        if role.kind == RoleKind.pendant and role.j != 1:
            raise bad_role(role)
        if role.kind in (RoleKind.star, RoleKind.leaf) and role.j > 3:
            raise bad_role(role)
        if role.kind == RoleKind.leaf and role.k > 3:
            raise bad_role(role)

    # With injective roles and the index bounds above, the count pins down every clump being complete
    expected = n * (5 if levels == 1 else 14)
    if g.n != expected:
        raise LabelingError("Expected {} vertices for {} clumps, got {}".format(expected, n, g.n))
    if g.family is not None and g.family.levels != levels:
        raise LabelingError("Graph is {}, labeler handles levels={}".format(g.family, levels))


def cps1_pendant_label(i):
    if i % 2 == 1:
        return 5 * i - 2
    if i % 6 != 0:
        return 5 * i - 3
    return 5 * i - 1


def cps1_star_label(i, j):
    """Label of ``s_{i,j}``.

    For i divisible by 6 the even-i formula would hand out ``5i - 1`` twice, so those clumps use ``5i-3, 5i-2, 5i`` instead.
    """
    if i % 2 == 1:
        return 5 * i - 3 if j == 3 else 5 * i - 2 + j
    if i % 6 != 0:
        return 5 * i - 3 + j
    return (5 * i - 3, 5 * i - 2, 5 * i)[j - 1]


def label_cps1(target):
    """``f(c_i) = 5i - 4``; pendant and star labels from :py:func:`cps1_pendant_label` and :py:func:`cps1_star_label`."""
    g = resolve_target(target, lambda n: FamilySpec.cps(n, 1))
    expect_family(g, Family.cps)
    _check_cps_roles(g, 1)

    def formula(role):
        if role.kind == RoleKind.cycle:
            return 5 * role.i - 4
        if role.kind == RoleKind.pendant:
            return cps1_pendant_label(role.i)
        return cps1_star_label(role.i, role.j)

    return label_by_role(g, formula)


def label_cps2(target):
    """``f(c_i) = 14i - 13``; everything else per :py:data:`CPS2_CLUMP_UNLESS_THIRD` / :py:data:`CPS2_CLUMP_EVERY_THIRD`."""
    g = resolve_target(target, lambda n: FamilySpec.cps(n, 2))
    expect_family(g, Family.cps)
    _check_cps_roles(g, 2)

    def formula(role):
        i = role.i
        if role.kind == RoleKind.cycle:
            return 14 * i - 13
        pendant, stars, leaves = CPS2_CLUMP_EVERY_THIRD if i % 3 == 0 else CPS2_CLUMP_UNLESS_THIRD
        if role.kind == RoleKind.pendant:
            offset = pendant
        elif role.kind == RoleKind.star:
            offset = stars[role.j - 1]
        else:
            offset = leaves[role.j - 1][role.k - 1]
        return 14 * i + offset

    return label_by_role(g, formula)
