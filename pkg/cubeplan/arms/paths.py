"""
Partial paths (cubes of the arm state complexes), Fibonacci paths and the pyramid unfolding.

A partial path is a word over N, E, Q (a unit square) and H (a half
square, final only). Resolving each square into NE or EN and the half
square into N or E gives the 2^k arm positions of one k-cube.
"""
from dataclasses import dataclass
from itertools import product
from typing import Iterator, List, Optional, Tuple

from tqdm import tqdm

from ..config.constants import (
    DOWNWARD,
    HORIZONTAL,
    QUADRANT,
    STRIP,
    SYMBOL_EAST,
    SYMBOL_HALF_SQUARE,
    SYMBOL_NORTH,
    SYMBOL_SQUARE,
    VERTICAL,
)
from ..core.exceptions import CapExceededError, StateError, ValidationError
from .posets import q_state_to_ideal, s_state_to_ideal
from .states import ArmState, QuadrantState, StripState

SYMBOL_LENGTH = {SYMBOL_NORTH: 1, SYMBOL_EAST: 1, SYMBOL_SQUARE: 2, SYMBOL_HALF_SQUARE: 1}
FLAVORS = (QUADRANT, STRIP)


@dataclass(frozen=True)
class PartialPath:
    """A partial NE-path (quadrant flavor) or partial F-path (strip flavor)."""

    symbols: str
    flavor: str = QUADRANT

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise ValidationError(f"unknown partial path flavor '{self.flavor}'")
        for position, symbol in enumerate(self.symbols):
            if symbol not in SYMBOL_LENGTH:
                raise ValidationError(f"unknown partial path symbol '{symbol}'")
            if symbol == SYMBOL_HALF_SQUARE and position != len(self.symbols) - 1:
                raise ValidationError("a half square may only be the last symbol")
            if (self.flavor == STRIP and symbol in (SYMBOL_NORTH, SYMBOL_SQUARE)
                    and position + 1 < len(self.symbols)
                    and self.symbols[position + 1] != SYMBOL_EAST):
                raise ValidationError(f"in a strip, '{symbol}' must be followed by E")

    @property
    def length(self) -> int:
        return sum(SYMBOL_LENGTH[s] for s in self.symbols)

    @property
    def dimension(self) -> int:
        """Number of squares and half squares."""
        return sum(1 for s in self.symbols if s in (SYMBOL_SQUARE, SYMBOL_HALF_SQUARE))

    def resolutions(self) -> List[str]:
        """The 2^k link words contained in the path; the upper boundary comes first."""
        choices = []
        for symbol in self.symbols:
            if symbol == SYMBOL_SQUARE:
                choices.append((VERTICAL + HORIZONTAL, HORIZONTAL + VERTICAL))
            elif symbol == SYMBOL_HALF_SQUARE:
                choices.append((VERTICAL, HORIZONTAL))
            else:
                choices.append((symbol,))
        return ["".join(parts) for parts in product(*choices)]

    def upper_boundary(self) -> str:
        return self.resolutions()[0]

    def resolve(self) -> List[ArmState]:
        """Arm states of the resolutions, as quadrant or strip states."""
        cls = QuadrantState if self.flavor == QUADRANT else StripState
        return [cls.of(len(word), (i + 1 for i, ch in enumerate(word) if ch == VERTICAL))
                for word in self.resolutions()]


def enumerate_partial_paths(n: int, flavor: str = QUADRANT,
                            cap: Optional[int] = None, progress: bool = False) -> Iterator[PartialPath]:
    """
    Generate every partial path of length n.

    Args:
        n: Path length
        flavor: 'quadrant' or 'strip'
        cap: Maximum number of paths
        progress: Show a progress bar

    Yields:
        Partial paths in lexicographic order of their symbol words

    Raises:
        CapExceededError: If more than ``cap`` paths exist
    """
    if flavor not in FLAVORS:
        raise ValidationError(f"unknown partial path flavor '{flavor}'")
    if n < 0:
        raise ValidationError(f"path length must be non-negative, got {n}")
    strip = flavor == STRIP
    symbols = sorted(SYMBOL_LENGTH)
    bar = tqdm(desc=f"Partial {flavor} paths n={n}", unit="path", disable=not progress)
    produced = 0

    def _grow(word: str, remaining: int) -> Iterator[str]:
        if remaining == 0:
            yield word
            return
        last = word[-1] if word else ""
        for symbol in symbols:
            if strip and last in (SYMBOL_NORTH, SYMBOL_SQUARE) and symbol != SYMBOL_EAST:
                continue
            size = SYMBOL_LENGTH[symbol]
            if size > remaining:
                continue
            if symbol == SYMBOL_HALF_SQUARE and size != remaining:
                continue
            yield from _grow(word + symbol, remaining - size)

    for word in _grow("", n):
        produced += 1
        if cap is not None and produced > cap:
            bar.close()
            raise CapExceededError(f"number of partial paths of length {n}", cap)
        bar.update(1)
        yield PartialPath(word, flavor)
    bar.close()


def partial_path_cube(path: PartialPath) -> Tuple[int, int]:
    """
    The cube C(I, M) of X(QP_n) or X(SP_n) encoded by a partial path.

    The upper boundary gives I; each square or half square lowers to
    remove exactly one maximal element of I, and these form M.

    Returns:
        (I, M) as bitsets over the arm poset
    """
    to_ideal = q_state_to_ideal if path.flavor == QUADRANT else s_state_to_ideal
    states = path.resolve()
    top = to_ideal(states[0])
    chosen = 0
    for corner in states[1:]:
        missing = top & ~to_ideal(corner)
        if bin(missing).count("1") == 1:
            chosen |= missing
    return top, chosen


# -- Fibonacci paths and the pyramid ------------------------------------------

def fibonacci_word(state: StripState) -> str:
    """Links of a strip arm: E, or N and S alternately for the vertical links."""
    letters = []
    up = True
    chosen = set(state.verticals)
    for i in range(1, state.n + 1):
        if i in chosen:
            letters.append(VERTICAL if up else DOWNWARD)
            up = not up
        else:
            letters.append(HORIZONTAL)
    return "".join(letters)


@dataclass(frozen=True)
class FPath:
    """An NE-path in the pyramid grid with no two consecutive north steps."""

    n: int
    steps: str

    @property
    def points(self) -> Tuple[Tuple[int, int], ...]:
        x = y = 0
        points = [(0, 0)]
        for step in self.steps:
            if step == VERTICAL:
                y += 1
            else:
                x += 1
            points.append((x, y))
        return tuple(points)

    def check(self) -> None:
        """
        Raise unless every step lies in the pyramid and no two north steps touch.

        Level k of the pyramid spans columns k..n-k; an east step at height y
        runs along the top of level y-1 or the bottom of level y.
        """
        if len(self.steps) != self.n:
            raise StateError(f"F-path has {len(self.steps)} steps, expected {self.n}")
        if VERTICAL * 2 in self.steps:
            raise StateError("F-path takes two consecutive north steps")
        x = y = 0
        for step in self.steps:
            if step == VERTICAL:
                if not (y <= x <= self.n - y):
                    raise StateError(f"north step at ({x}, {y}) leaves the pyramid")
                y += 1
            elif step == HORIZONTAL:
                if not (max(y - 1, 0) <= x and x + 1 <= self.n - max(y - 1, 0)):
                    raise StateError(f"east step at ({x}, {y}) leaves the pyramid")
                x += 1
            else:
                raise StateError(f"F-path step '{step}' is neither N nor E")


def unfold(state: StripState) -> FPath:
    """
    Unfold a Fibonacci path into the pyramid.

    From the second vertical link on, the rest of the arm is flipped
    vertically into the next level, so every vertical link points north.
    """
    steps = []
    for letter in fibonacci_word(state):
        steps.append(HORIZONTAL if letter == HORIZONTAL else VERTICAL)
    path = FPath(state.n, "".join(steps))
    path.check()
    return path


def refold(path: FPath) -> StripState:
    """Inverse of :func:`unfold`."""
    path.check()
    return StripState.of(path.n, (i + 1 for i, step in enumerate(path.steps) if step == VERTICAL))
