"""
Planner: optimal plans between two states of a system with a CAT(0) state complex.
"""
from itertools import combinations
from typing import Iterator, List, Optional, Sequence, Union

from ..complexes import NotCat0Report, reconstruct
from ..core.exceptions import NotCat0Error, PlanError
from ..core.logger import PlannerLogger
from ..pips import iter_bits
from ..reconfig import ReconfigSystem, RState, explore, state_complex
from ..reconfig.explorer import cube_corners
from .coders import ArmCoder, ReconstructionCoder, StateCoder
from .plan import CubePath, Metric, Plan, check_cube_path, cube_path, goal_ideal, iter_shortest_move_plans


def replay(system: ReconfigSystem, start: RState, steps: Sequence[Sequence[str]], goal: RState) -> List[RState]:
    """
    Execute a plan move by move.

    Each stage must name distinct, pairwise commuting moves that are all
    admissible at the current state, and the last state must be the goal.

    Returns:
        The states visited, start first

    Raises:
        PlanError: On an unknown, inadmissible or conflicting move, or a wrong final state
    """
    state = system.validate_state(start)
    visited = [state]
    table = system.moves
    for number, step in enumerate(steps, start=1):
        if not step:
            raise PlanError(f"step {number} is empty")
        chosen = []
        for move in step:
            if move not in table:
                raise PlanError(f"step {number}: unknown move '{move}'")
            k, side = table[move]
            if system.generators[k].side(state) != side:
                raise PlanError(f"step {number}: move '{move}' is not admissible at {state.encode()}")
            if k in chosen:
                raise PlanError(f"step {number}: generator '{system.generators[k].name}' moves twice")
            chosen.append(k)
        for g, h in combinations(chosen, 2):
            if not system.commute_matrix[g, h]:
                raise PlanError(f"step {number}: moves of '{system.generators[g].name}' and "
                                f"'{system.generators[h].name}' do not commute")
        corners = cube_corners(system, state, chosen)
        if corners is None:
            raise PlanError(f"step {number} passes through a state the system rejects")
        state = corners[-1]
        visited.append(state)
    if state != goal:
        raise PlanError(f"plan ends at {state.encode()} instead of {goal.encode()}")
    return visited


class Planner:
    """
    Plans on a system through the PIP of its state complex.

    A plan from a to b is a cube path from the empty ideal to a xor b in
    the PIP rerooted at a; each added element is translated back to the
    unique move between consecutive states.
    """

    def __init__(self, coder: StateCoder):
        self.coder = coder
        self.system = coder.system
        self.pip = coder.pip
        self.logger = PlannerLogger.get_logger(self.__class__.__name__)

    @classmethod
    def for_robot(cls, kind: str, n: int) -> 'Planner':
        """Planner for the quadrant or strip arm, using the closed-form bijections."""
        return cls(ArmCoder(kind, n))

    @classmethod
    def for_system(cls,
                   system: ReconfigSystem,
                   max_states: Optional[int] = None,
                   max_ideals: Optional[int] = None,
                   progress: bool = False) -> 'Planner':
        """
        Planner for any system whose state complex, rooted at the seed, is CAT(0).

        Raises:
            NotCat0Error: If the state complex has no PIP
            CapExceededError: If a cap is exceeded while exploring or rebuilding
        """
        exploration = explore(system, max_states, progress)
        complex_ = state_complex(exploration, progress=progress)
        result = reconstruct(complex_, 0, max_ideals)
        if isinstance(result, NotCat0Report):
            raise NotCat0Error(result)
        return cls(ReconstructionCoder(exploration, result))

    # -- states ---------------------------------------------------------

    def encode_state(self, state: RState) -> int:
        return self.coder.encode(state)

    def decode_ideal(self, ideal: int) -> RState:
        return self.coder.decode(ideal)

    def describe(self, state: RState) -> str:
        return self.coder.describe(state)

    # -- planning -------------------------------------------------------

    def cube_path(self, start: RState, goal: RState, metric: Union[Metric, str] = Metric.STEPS,
                  reverse: bool = False) -> CubePath:
        """The cube path in the PIP rerooted at ``start``."""
        rerooted, target = goal_ideal(self.pip, self.encode_state(start), self.encode_state(goal))
        return cube_path(rerooted, target, Metric.parse(metric), reverse)

    def plan(self, start: RState, goal: RState, metric: Union[Metric, str] = Metric.STEPS,
             reverse: bool = False, verify: bool = True) -> Plan:
        """
        An optimal plan from ``start`` to ``goal``.

        Args:
            start: Start state
            goal: Goal state
            metric: 'moves', 'steps' or 'time'
            reverse: Use the reverse normal cube path for stage-based metrics
            verify: Replay the plan before returning it

        Returns:
            The plan; its length is |B| for moves and d(B) otherwise

        Raises:
            ValidationError: On invalid states or an unsupported metric
            PlanError: If the plan does not replay
        """
        metric = Metric.parse(metric).require_supported()
        path = self.cube_path(start, goal, metric, reverse)
        plan = self._translate(start, goal, path, metric)
        self.logger.debug(f"Planned {self.describe(start)} -> {self.describe(goal)}: "
                          f"{plan.length} step(s), {plan.move_count} move(s) ({metric.value})")
        if verify:
            self.replay(plan)
        return plan

    def enumerate_move_plans(self, start: RState, goal: RState, limit: Optional[int] = None) -> Iterator[Plan]:
        """Every plan with the fewest single moves, one per linear extension of the goal ideal."""
        rerooted, target = goal_ideal(self.pip, self.encode_state(start), self.encode_state(goal))
        for path in iter_shortest_move_plans(rerooted, target, limit):
            yield self._translate(start, goal, path, Metric.MOVES)

    def _translate(self, start: RState, goal: RState, path: CubePath, metric: Metric) -> Plan:
        check_cube_path(path)
        origin = self.encode_state(start)
        steps = []
        trace = [self.describe(start)]
        added = 0
        for layer in path.layers:
            before = self.decode_ideal(origin ^ added)
            moves = []
            for i in iter_bits(self.pip.mask_of(path.pip.members(layer))):
                after = self.decode_ideal(origin ^ (added | 1 << i))
                _, name = self.system.move_between(before, after)
                moves.append(name)
            added |= self.pip.mask_of(path.pip.members(layer))
            steps.append(tuple(moves))
            trace.append(self.describe(self.decode_ideal(origin ^ added)))
        return Plan(self.coder.state_to_dict(start), self.coder.state_to_dict(goal),
                    metric.value, tuple(steps), tuple(trace))

    # -- verification ---------------------------------------------------

    def replay(self, plan: Plan) -> List[RState]:
        """
        Replay a plan on the system.

        Raises:
            PlanError: If the plan is not executable or does not reach its goal
        """
        start = self.coder.state_from_dict(plan.start)
        goal = self.coder.state_from_dict(plan.goal)
        return replay(self.system, start, plan.steps, goal)


def plan(system: ReconfigSystem, start: RState, goal: RState,
         metric: Union[Metric, str] = Metric.STEPS, reverse: bool = False) -> Plan:
    """Explore ``system``, check that its state complex is CAT(0) and plan from ``start`` to ``goal``."""
    return Planner.for_system(system).plan(start, goal, metric, reverse)
