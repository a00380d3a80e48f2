"""
The home-state order of the arms: join-irreducibles and the word order.

Ordered from the horizontal arm, the states of QR_n and SR_n form a
distributive lattice. Its join-irreducible states, under the induced
order, are the arm posets QP_n and SP_n.
"""
import logging
from itertools import product
from typing import List, Tuple, Type

from ..config.constants import QUADRANT, STRIP
from ..core.exceptions import ValidationError
from ..pips import Pip, pips_isomorphic
from ..reconfig import StateOrder, explore, home_order
from .posets import qp_pip, sp_pip
from .states import ArmState, QuadrantState, StripState
from .systems import robot_system

logger = logging.getLogger(__name__)


def _state_class(flavor: str) -> Type[ArmState]:
    if flavor == QUADRANT:
        return QuadrantState
    if flavor == STRIP:
        return StripState
    raise ValidationError(f"unknown robot type '{flavor}'")


def arm_order(n: int, flavor: str) -> Tuple[StateOrder, List[ArmState]]:
    """Home order of the arm of length n, with its states decoded as arm states."""
    cls = _state_class(flavor)
    order = home_order(explore(robot_system(flavor, n)))
    return order, [cls.from_rstate(state, n) for state in order.states]


def arm_pip(n: int, flavor: str) -> Pip:
    _state_class(flavor)
    return qp_pip(n) if flavor == QUADRANT else sp_pip(n)


def join_irreducibles_check(n: int, flavor: str) -> bool:
    """
    Check that the join-irreducible arm states, ordered from home, form
    the arm poset of length n.

    Args:
        n: Arm length
        flavor: 'quadrant' or 'strip'

    Returns:
        True if the order is a distributive lattice whose join-irreducibles
        induce a poset isomorphic to QP_n (or SP_n)
    """
    order, states = arm_order(n, flavor)
    if not order.is_distributive():
        logger.info(f"{flavor} n={n}: home order is not a distributive lattice")
        return False
    members = order.join_irreducibles()
    induced = order.induced_pip(members, name=lambda p: f"s{p}")
    target = arm_pip(n, flavor)
    if len(induced) != len(target):
        logger.info(f"{flavor} n={n}: {len(induced)} join-irreducibles, expected {len(target)}")
        return False
    matched = pips_isomorphic(induced, target)
    logger.debug(f"{flavor} n={n}: join-irreducibles "
                 f"{[states[p].format() for p in members]} isomorphic={matched}")
    return matched


def word_leq(first: ArmState, second: ArmState) -> bool:
    """Word order: first <= second iff w(first) >= w(second) coordinatewise."""
    return all(a >= b for a, b in zip(first.word(), second.word()))


def word_order_agrees(n: int, flavor: str) -> bool:
    """Check that the home order of the arm coincides with the word order on every pair of states."""
    order, states = arm_order(n, flavor)
    size = len(states)
    for p, q in product(range(size), repeat=2):
        if order.leq(p, q) != word_leq(states[p], states[q]):
            logger.info(f"{flavor} n={n}: orders disagree on {states[p].format() or '-'} "
                        f"and {states[q].format() or '-'}")
            return False
    return True
