"""
Optimal cube paths in X(P) and the plans built from them.

Planning from a to b happens in the PIP rerooted at a, where the goal
is the ideal B = a xor b and every shortest path starts at the empty ideal:

    moves  a linear extension of B, |B| single moves
    steps  the normal cube path, d(B) stages of simultaneous moves
    time   the same stages; d(B) is also the fastest l-infinity schedule
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterator, List, Optional, Tuple

from ..config.constants import METRIC_EUCLIDEAN, METRIC_MOVES, METRIC_STEPS, METRIC_TIME
from ..core.exceptions import PlanError, ValidationError
from ..pips import Pip, depth, iter_linear_extensions, require_ideal, reroot, rerooted_ideal
from ..pips.ideals import IdealLike


class Metric(str, Enum):
    MOVES = METRIC_MOVES
    STEPS = METRIC_STEPS
    TIME = METRIC_TIME
    EUCLIDEAN = METRIC_EUCLIDEAN

    @classmethod
    def parse(cls, value: Any) -> 'Metric':
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            choices = ", ".join(m.value for m in cls)
            raise ValidationError(f"unknown metric '{value}', expected one of: {choices}") from None

    def require_supported(self) -> 'Metric':
        if self is Metric.EUCLIDEAN:
            raise ValidationError(
                "the euclidean metric is not supported: l2 geodesics in a CAT(0) cube complex need "
                "a separate geodesic algorithm; use 'time' for the optimal l-infinity schedule"
            )
        return self


@dataclass(frozen=True)
class CubePath:
    """
    A cube path from the empty ideal of ``pip``.

    Each layer is an antichain added in one stage; the union of all
    layers is the goal ideal.
    """

    pip: Pip = field(compare=False, repr=False)
    layers: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.layers)

    @property
    def goal(self) -> int:
        mask = 0
        for layer in self.layers:
            mask |= layer
        return mask

    def steps(self) -> Tuple[Tuple[str, ...], ...]:
        """Element identifiers added at each stage."""
        return tuple(self.pip.members(layer) for layer in self.layers)

    def ideals(self) -> List[int]:
        """I_0 = empty, I_1, ..., I_k = goal."""
        current = 0
        ideals = [current]
        for layer in self.layers:
            current |= layer
            ideals.append(current)
        return ideals


@dataclass(frozen=True)
class Plan:
    """
    Move names executed in stages between two states.

    ``start`` and ``goal`` are in the JSON form of the owning system's
    states; ``trace`` holds a readable form of every visited state.
    """

    start: Any
    goal: Any
    metric: str
    steps: Tuple[Tuple[str, ...], ...]
    trace: Tuple[str, ...] = field(default=(), compare=False)

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def move_count(self) -> int:
        return sum(len(step) for step in self.steps)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "start": self.start,
            "goal": self.goal,
            "metric": self.metric,
            "steps": [list(step) for step in self.steps],
            "length": self.length,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Plan':
        """
        Parse a plan file.

        Raises:
            PlanError: If a field is missing or the recorded length disagrees with the steps
        """
        try:
            steps = tuple(tuple(str(move) for move in step) for step in data["steps"])
            plan = cls(data["start"], data["goal"], str(data.get("metric", METRIC_STEPS)), steps)
        except (KeyError, TypeError) as e:
            raise PlanError(f"malformed plan: {e}") from None
        if "length" in data and data["length"] != plan.length:
            raise PlanError(f"plan records length {data['length']} but has {plan.length} steps")
        return plan


def goal_ideal(pip: Pip, start: IdealLike, goal: IdealLike) -> Tuple[Pip, int]:
    """
    Reroot at ``start`` and locate ``goal`` in the rerooted PIP.

    Returns:
        The rerooted PIP and the goal ideal in it
    """
    return reroot(pip, start), rerooted_ideal(pip, start, goal)


def normal_cube_path(pip: Pip, goal: IdealLike) -> CubePath:
    """
    The normal cube path from the empty ideal to ``goal``.

    Every stage adds all minimal elements not yet added; its length is
    depth(goal), the fewest possible stages.
    """
    mask = require_ideal(pip, goal, "goal ideal")
    layers = []
    added = 0
    while added != mask:
        layer = pip.minimal(mask & ~added)
        layers.append(layer)
        added |= layer
    return CubePath(pip, tuple(layers))


def reverse_normal_cube_path(pip: Pip, goal: IdealLike) -> CubePath:
    """
    The normal cube path from ``goal`` back to the empty ideal, read forwards.

    Stages peel off maximal elements; the length is again depth(goal) but
    the stages usually differ from :func:`normal_cube_path`.
    """
    mask = require_ideal(pip, goal, "goal ideal")
    peeled = []
    remaining = mask
    while remaining:
        layer = pip.maximal(remaining)
        peeled.append(layer)
        remaining &= ~layer
    return CubePath(pip, tuple(reversed(peeled)))


def shortest_move_plan(pip: Pip, goal: IdealLike) -> CubePath:
    """
    A shortest edge path: |goal| single moves, each adding the first
    available minimal element in canonical order.
    """
    mask = require_ideal(pip, goal, "goal ideal")
    layers = []
    added = 0
    while added != mask:
        available = pip.minimal(mask & ~added)
        first = available & -available
        layers.append(first)
        added |= first
    return CubePath(pip, tuple(layers))


def iter_shortest_move_plans(pip: Pip, goal: IdealLike, limit: Optional[int] = None) -> Iterator[CubePath]:
    """Every shortest edge path to ``goal``, one per linear extension, in lexicographic order."""
    for order in iter_linear_extensions(pip, goal, limit):
        yield CubePath(pip, tuple(pip.bit(e) for e in order))


def makespan(pip: Pip, goal: IdealLike) -> int:
    """
    Fastest completion time, d(goal).

    With unit-time moves run in parallel whenever they commute (the
    l-infinity metric on each cube), no schedule beats the normal cube path.
    """
    return depth(pip, require_ideal(pip, goal, "goal ideal"))


def cube_path(pip: Pip, goal: IdealLike, metric: Metric, reverse: bool = False) -> CubePath:
    """The cube path for ``metric``: a shortest edge path for moves, a normal cube path otherwise."""
    metric = Metric.parse(metric).require_supported()
    if metric is Metric.MOVES:
        return shortest_move_plan(pip, goal)
    if reverse:
        return reverse_normal_cube_path(pip, goal)
    return normal_cube_path(pip, goal)


def check_cube_path(path: CubePath) -> None:
    """
    Raise unless every stage is a nonempty antichain and every intermediate set is an ideal.
    """
    pip = path.pip
    current = 0
    for layer in path.layers:
        if not layer:
            raise PlanError("cube path has an empty stage")
        if layer & current:
            raise PlanError(f"stage {{{', '.join(pip.members(layer))}}} repeats an element")
        if not pip.is_antichain(layer):
            raise PlanError(f"stage {{{', '.join(pip.members(layer))}}} is not an antichain")
        current |= layer
        require_ideal(pip, current, "intermediate set")

