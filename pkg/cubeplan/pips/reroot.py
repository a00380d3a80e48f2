"""
Rerooting: the PIP of the same cube complex seen from another vertex.
"""
import logging
from typing import Set

from ..core.exceptions import PipError
from .ideals import IdealLike, require_ideal
from .pip import Pair, Pip, iter_bits, validate

logger = logging.getLogger(__name__)


def reroot(pip: Pip, root: IdealLike) -> Pip:
    """
    Reroot a PIP at the vertex given by a consistent ideal.

    With I the new root ideal and J its complement: order inside J is
    kept, order inside I is reversed, i < j becomes inconsistent,
    inconsistency inside J is kept, and i inconsistent with j becomes i < j.
    Element identifiers are preserved.

    Args:
        pip: The PIP rooted at the old base vertex
        root: Consistent ideal of the new root

    Returns:
        The normalized PIP rooted at the new vertex

    Raises:
        PipError: If ``root`` is not a consistent ideal
    """
    inside = require_ideal(pip, root, "root")
    elements = pip.elements
    up = pip.up_masks
    covers: Set[Pair] = set()
    inconsistent: Set[Pair] = set()

    for x in range(len(elements)):
        for y in iter_bits(up[x] & ~(1 << x)):
            x_in, y_in = bool(inside >> x & 1), bool(inside >> y & 1)
            if x_in and y_in:
                covers.add((elements[y], elements[x]))
            elif x_in:
                inconsistent.add((elements[x], elements[y]))
            else:
                covers.add((elements[x], elements[y]))

    for a, b in pip.closed_inconsistent():
        a_in = bool(inside & pip.bit(a))
        b_in = bool(inside & pip.bit(b))
        if a_in and b_in:
            raise PipError(f"root ideal contains inconsistent pair {{{a}, {b}}}")
        if a_in:
            covers.add((a, b))
        elif b_in:
            covers.add((b, a))
        else:
            inconsistent.add((a, b))

    rerooted = Pip.build(elements, covers, inconsistent)
    report = validate(rerooted)
    if not report:
        raise PipError(f"rerooted PIP is invalid: {report.message}")
    logger.debug(f"Rerooted {len(pip)}-element PIP at {{{', '.join(pip.members(inside))}}}")
    return rerooted.normalized()


def rerooted_ideal(pip: Pip, root: IdealLike, target: IdealLike) -> int:
    """
    Image of ``target`` in the PIP rerooted at ``root``.

    The vertex bijection sends B to (I - B) together with (B - I), the
    symmetric difference of the two ideals; it is its own inverse.

    Returns:
        Bitset over the (shared) element ordering
    """
    inside = require_ideal(pip, root, "root")
    goal = require_ideal(pip, target, "target")
    return inside ^ goal
