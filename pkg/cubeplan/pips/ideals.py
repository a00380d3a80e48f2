"""
Consistent order ideals of a PIP and the counts built on them.
"""
import logging
from functools import lru_cache
from typing import Iterable, Iterator, List, Optional, Tuple, Union

from ..core.exceptions import CapExceededError, PipError
from .pip import Pip, iter_bits, validate

logger = logging.getLogger(__name__)

IdealLike = Union[int, Iterable[str]]


def _as_mask(pip: Pip, ideal: IdealLike) -> int:
    if isinstance(ideal, int):
        if ideal < 0 or ideal > pip.full_mask:
            raise PipError(f"bitset {ideal} is outside the element range")
        return ideal
    return pip.mask_of(ideal)


def ideal_sort_key(mask: int) -> Tuple[int, Tuple[int, ...]]:
    """Canonical ordering of ideals: by size, then lexicographically by element position."""
    return bin(mask).count("1"), tuple(iter_bits(mask))


def is_consistent_ideal(pip: Pip, members: IdealLike) -> bool:
    """
    Check whether a set of elements is a consistent order ideal.

    Args:
        pip: The PIP
        members: Bitset or iterable of element identifiers

    Returns:
        True iff the set is downward closed and contains no inconsistent pair
    """
    mask = _as_mask(pip, members)
    down = pip.down_masks
    conflict = pip.conflict_masks
    for i in iter_bits(mask):
        if down[i] & ~mask or conflict[i] & mask:
            return False
    return True


def require_ideal(pip: Pip, members: IdealLike, what: str = "set") -> int:
    """Return the bitset of ``members`` or raise if it is not a consistent ideal."""
    mask = _as_mask(pip, members)
    if not is_consistent_ideal(pip, mask):
        raise PipError(f"{what} {{{', '.join(pip.members(mask))}}} is not a consistent order ideal")
    return mask


def consistent_ideals(pip: Pip, cap: Optional[int] = None) -> List[int]:
    """
    Enumerate every consistent order ideal.

    Elements are decided in topological order; an element may join only
    when all of its lower covers are in and it conflicts with nothing
    already chosen, so each ideal is produced exactly once.

    Args:
        pip: A validated PIP
        cap: Maximum number of ideals to produce

    Returns:
        Ideal bitsets in canonical order (empty ideal first)

    Raises:
        PipError: If the PIP fails validation
        CapExceededError: If more than ``cap`` ideals exist
    """
    report = validate(pip)
    if not report:
        raise PipError(report.message)

    order = [pip.index[e] for e in pip.topological_order]
    down = pip.down_masks
    conflict = pip.conflict_masks
    ideals: List[int] = []

    def _extend(position: int, current: int) -> None:
        if position == len(order):
            ideals.append(current)
            if cap is not None and len(ideals) > cap:
                raise CapExceededError("number of consistent ideals", cap)
            return
        i = order[position]
        _extend(position + 1, current)
        if down[i] & ~(1 << i) & ~current == 0 and conflict[i] & current == 0:
            _extend(position + 1, current | (1 << i))

    _extend(0, 0)
    ideals.sort(key=ideal_sort_key)
    logger.debug(f"Enumerated {len(ideals)} consistent ideals over {len(pip)} elements")
    return ideals


def linear_extensions(pip: Pip, ideal: IdealLike) -> int:
    """
    Count the linear extensions of an ideal.

    Args:
        pip: The PIP
        ideal: A consistent ideal

    Returns:
        The exact number of total orders of the ideal extending the partial order
    """
    mask = require_ideal(pip, ideal, "ideal")
    up = pip.up_masks

    @lru_cache(maxsize=None)
    def _count(sub: int) -> int:
        if sub == 0:
            return 1
        total = 0
        for i in iter_bits(sub):
            if up[i] & sub == 1 << i:
                total += _count(sub & ~(1 << i))
        return total

    return _count(mask)


def iter_linear_extensions(pip: Pip, ideal: IdealLike, limit: Optional[int] = None) -> Iterator[Tuple[str, ...]]:
    """
    Enumerate the linear extensions of an ideal in lexicographic order.

    Args:
        pip: The PIP
        ideal: A consistent ideal
        limit: Refuse to start when more than this many extensions exist

    Yields:
        Tuples of element identifiers, each a valid order of addition

    Raises:
        CapExceededError: If the number of extensions exceeds ``limit``
    """
    mask = require_ideal(pip, ideal, "ideal")
    if limit is not None:
        total = linear_extensions(pip, mask)
        if total > limit:
            raise CapExceededError(f"number of linear extensions ({total})", limit)
    down = pip.down_masks

    def _walk(added: int, prefix: Tuple[str, ...]) -> Iterator[Tuple[str, ...]]:
        remaining = mask & ~added
        if not remaining:
            yield prefix
            return
        for i in iter_bits(remaining):
            if down[i] & ~(1 << i) & ~added == 0:
                yield from _walk(added | (1 << i), prefix + (pip.elements[i],))

    yield from _walk(0, ())


def depth(pip: Pip, ideal: IdealLike) -> int:
    """
    Length of a longest chain inside an ideal (0 for the empty ideal).

    Args:
        pip: The PIP
        ideal: Any subset of elements; chains are taken inside it

    Returns:
        Number of elements in a longest chain
    """
    mask = _as_mask(pip, ideal)
    down = pip.down_masks
    height = {}
    for e in pip.topological_order:
        i = pip.index[e]
        if not mask >> i & 1:
            continue
        below = down[i] & mask & ~(1 << i)
        height[i] = 1 + max((height[j] for j in iter_bits(below)), default=0)
    return max(height.values(), default=0)
