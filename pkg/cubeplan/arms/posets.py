"""
The PIPs of the two arms and the bijections between arm states and their ideals.

The quadrant poset has elements (x, y) with 0 <= y <= x <= n-1 under the
componentwise order. The strip poset has elements (k, i) with k >= 1 and
1 <= i <= n-2k+2, where (k, i) <= (k', i') iff k <= k' and i >= i'.
Neither has inconsistent pairs.
"""
from functools import lru_cache
from typing import List, Tuple

from ..core.exceptions import PipError, StateError
from ..pips import Pip, require_ideal
from .states import QuadrantState, StripState


def _cell_id(a: int, b: int) -> str:
    return f"{a},{b}"


def _cell(element: str) -> Tuple[int, int]:
    a, b = element.split(",")
    return int(a), int(b)


def quadrant_cells(n: int) -> List[Tuple[int, int]]:
    return [(x, y) for x in range(n) for y in range(x + 1)]


def strip_cells(n: int) -> List[Tuple[int, int]]:
    return [(k, i) for k in range(1, n // 2 + 2) for i in range(1, n - 2 * k + 3)]


@lru_cache(maxsize=None)
def qp_pip(n: int) -> Pip:
    """
    The PIP of the arm in the quadrant: lattice points of the triangle under
    the componentwise order, n(n+1)/2 elements.
    """
    if n < 1:
        raise PipError(f"arm length must be at least 1, got {n}")
    cells = quadrant_cells(n)
    present = set(cells)
    covers = []
    for x, y in cells:
        for up in ((x + 1, y), (x, y + 1)):
            if up in present:
                covers.append((_cell_id(x, y), _cell_id(*up)))
    return Pip.build((_cell_id(x, y) for x, y in cells), covers)


@lru_cache(maxsize=None)
def sp_pip(n: int) -> Pip:
    """
    The PIP of the arm in a strip: stacked chains of sizes n, n-2, n-4, ...
    """
    if n < 1:
        raise PipError(f"arm length must be at least 1, got {n}")
    cells = strip_cells(n)
    present = set(cells)
    covers = []
    for k, i in cells:
        for up in ((k, i - 1), (k + 1, i)):
            if up in present:
                covers.append((_cell_id(k, i), _cell_id(*up)))
    return Pip.build((_cell_id(k, i) for k, i in cells), covers)


def q_state_to_ideal(state: QuadrantState) -> int:
    """
    Ideal of a quadrant state A = {a_1 < ... < a_k}.

    (x, y) belongs to it iff y + 1 <= k and a_m <= (n - x) + m - 1 for every m <= y + 1.
    """
    n, a = state.n, state.verticals
    pip = qp_pip(n)
    mask = 0
    for x, y in quadrant_cells(n):
        if y + 1 <= len(a) and all(a[m - 1] <= (n - x) + m - 1 for m in range(1, y + 2)):
            mask |= pip.bit(_cell_id(x, y))
    return mask


def q_ideal_to_state(n: int, ideal: int) -> QuadrantState:
    """
    Quadrant state of an ideal: a_m = min{n - x + m - 1 : (x, y) in I, y >= m - 1}.

    Raises:
        PipError: If the bitset is not an ideal of the quadrant poset
    """
    pip = qp_pip(n)
    mask = require_ideal(pip, ideal, "ideal")
    cells = [_cell(e) for e in pip.members(mask)]
    verticals = []
    for m in range(1, n + 1):
        candidates = [n - x + m - 1 for x, y in cells if y >= m - 1]
        if not candidates:
            break
        verticals.append(min(candidates))
    try:
        return QuadrantState.of(n, verticals)
    except StateError as e:
        raise PipError(f"ideal does not decode to a quadrant state: {e}") from e


def s_state_to_ideal(state: StripState) -> int:
    """
    Ideal of a strip state A = {a_1 < ... < a_k}.

    (k, i) belongs to it iff |A| >= k and a_m <= i + 2(m - 1) for every m <= k.
    """
    n, a = state.n, state.verticals
    pip = sp_pip(n)
    mask = 0
    for k, i in strip_cells(n):
        if len(a) >= k and all(a[m - 1] <= i + 2 * (m - 1) for m in range(1, k + 1)):
            mask |= pip.bit(_cell_id(k, i))
    return mask


def s_ideal_to_state(n: int, ideal: int) -> StripState:
    """
    Strip state of an ideal: a_m = min{i + 2(m - 1) : (k, i) in I, k >= m}.

    Raises:
        PipError: If the bitset is not an ideal of the strip poset
    """
    pip = sp_pip(n)
    mask = require_ideal(pip, ideal, "ideal")
    cells = [_cell(e) for e in pip.members(mask)]
    verticals = []
    for m in range(1, n + 1):
        candidates = [i + 2 * (m - 1) for k, i in cells if k >= m]
        if not candidates:
            break
        verticals.append(min(candidates))
    try:
        return StripState.of(n, verticals)
    except StateError as e:
        raise PipError(f"ideal does not decode to a strip state: {e}") from e

