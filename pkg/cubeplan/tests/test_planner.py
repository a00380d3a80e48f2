"""
Unit tests for cube paths, plans, replay and the planner.
"""

import os
import sys
import unittest

# Add the project root to the path so the package can be imported
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '../..')))

from cubeplan.arms import QuadrantState, quadrant_system, snake_system
from cubeplan.core.exceptions import NotCat0Error, PipError, PlanError, StateError, ValidationError
from cubeplan.pips import Pip
from cubeplan.planner import (
    ArmCoder,
    CubePath,
    Metric,
    Plan,
    Planner,
    StateCoder,
    check_cube_path,
    cube_path,
    goal_ideal,
    makespan,
    normal_cube_path,
    plan,
    replay,
    reverse_normal_cube_path,
    shortest_move_plan,
)
from cubeplan.reconfig import RState


class TestMetric(unittest.TestCase):
    """Test cases for the Metric enum."""

    def test_parse(self):
        """Test parsing metric names."""
        self.assertIs(Metric.parse('STEPS'), Metric.STEPS)
        self.assertIs(Metric.parse(Metric.TIME), Metric.TIME)
        with self.assertRaises(ValidationError):
            Metric.parse('fast')

    def test_euclidean_unsupported(self):
        """Test that the euclidean metric is refused."""
        with self.assertRaises(ValidationError) as ctx:
            Metric.EUCLIDEAN.require_supported()
        self.assertIn("'time'", str(ctx.exception))
        self.assertIs(Metric.MOVES.require_supported(), Metric.MOVES)


class TestCubePaths(unittest.TestCase):
    """Test cases for cube paths in a PIP."""

    def setUp(self):
        """Set up test fixtures."""
        # a < b, c free
        self.pip = Pip.build(['a', 'b', 'c'], [('a', 'b')])

    def test_normal_cube_path(self):
        """Test that each stage adds every available minimal element."""
        path = normal_cube_path(self.pip, 7)
        self.assertEqual(path.layers, (5, 2))
        self.assertEqual(path.steps(), (('a', 'c'), ('b',)))
        self.assertEqual(path.ideals(), [0, 5, 7])
        self.assertEqual(path.goal, 7)

    def test_reverse_normal_cube_path(self):
        """Test peeling maximal elements from the goal."""
        path = reverse_normal_cube_path(self.pip, 7)
        self.assertEqual(path.layers, (1, 6))
        self.assertEqual(path.length, 2)

    def test_shortest_move_plan(self):
        """Test single moves in canonical order."""
        path = shortest_move_plan(self.pip, 7)
        self.assertEqual(path.layers, (1, 2, 4))

    def test_cube_path_by_metric(self):
        """Test choosing the path for each metric."""
        self.assertEqual(cube_path(self.pip, 7, Metric.MOVES).length, 3)
        self.assertEqual(cube_path(self.pip, 7, 'steps').length, 2)
        self.assertEqual(cube_path(self.pip, 7, 'time', reverse=True).layers, (1, 6))
        self.assertEqual(makespan(self.pip, 7), 2)
        with self.assertRaises(ValidationError):
            cube_path(self.pip, 7, 'euclidean')

    def test_goal_must_be_ideal(self):
        """Test that the goal has to be a consistent ideal."""
        with self.assertRaises(PipError):
            normal_cube_path(self.pip, 2)

    def test_check_cube_path(self):
        """Test rejected cube paths."""
        check_cube_path(normal_cube_path(self.pip, 7))
        with self.assertRaises(PlanError):
            check_cube_path(CubePath(self.pip, (0,)))
        with self.assertRaises(PlanError):
            check_cube_path(CubePath(self.pip, (1, 1)))
        with self.assertRaises(PlanError):
            check_cube_path(CubePath(self.pip, (3,)))
        with self.assertRaises(PipError):
            check_cube_path(CubePath(self.pip, (2,)))

    def test_goal_ideal(self):
        """Test rerooting at the start."""
        chain = Pip.build(['a', 'b'], [('a', 'b')])
        rerooted, target = goal_ideal(chain, 1, 3)
        self.assertEqual(target, 2)
        self.assertEqual(rerooted.inconsistent, frozenset({('a', 'b')}))


class TestPlan(unittest.TestCase):
    """Test cases for the Plan class."""

    def test_dict_round_trip(self):
        """Test reading back the JSON form."""
        original = Plan({'n': 2, 'verticals': []}, {'n': 2, 'verticals': [2]}, 'steps',
                        (('enter@2',),), ('EE', 'EN'))
        data = original.to_dict()
        self.assertEqual(data['length'], 1)
        self.assertEqual(Plan.from_dict(data), original)

    def test_bad_plans(self):
        """Test malformed plan files."""
        with self.assertRaises(PlanError):
            Plan.from_dict({'start': {}, 'goal': {}})
        with self.assertRaises(PlanError):
            Plan.from_dict({'start': {}, 'goal': {}, 'steps': [['a']], 'length': 2})


class TestReplay(unittest.TestCase):
    """Test cases for replaying plans on a system."""

    def setUp(self):
        """Set up test fixtures."""
        self.system = quadrant_system(2)
        self.start = RState.decode('1=E;2=E')
        self.goal = RState.decode('1=N;2=N')

    def test_replay(self):
        """Test a valid plan."""
        steps = [['enter@2'], ['hop_left@2'], ['enter@2']]
        visited = replay(self.system, self.start, steps, self.goal)
        self.assertEqual([s.encode() for s in visited],
                         ['1=E;2=E', '1=E;2=N', '1=N;2=E', '1=N;2=N'])

    def test_wrong_goal(self):
        """Test that the plan must end at its goal."""
        with self.assertRaises(PlanError):
            replay(self.system, self.start, [['enter@2']], self.goal)

    def test_unknown_move(self):
        """Test that moves must exist."""
        with self.assertRaises(PlanError):
            replay(self.system, self.start, [['fly']], self.goal)

    def test_inadmissible_move(self):
        """Test that a move must start from the current local state."""
        with self.assertRaises(PlanError):
            replay(self.system, self.start, [['leave@2']], self.goal)

    def test_conflicting_moves(self):
        """Test that moves in one step must commute."""
        at = RState.decode('1=E;2=N')
        with self.assertRaises(PlanError):
            replay(self.system, at, [['hop_left@2', 'leave@2']], self.goal)

    def test_empty_step(self):
        """Test that steps may not be empty."""
        with self.assertRaises(PlanError):
            replay(self.system, self.start, [[]], self.start)


class TestPlanner(unittest.TestCase):
    """Test cases for the Planner class."""

    def setUp(self):
        """Set up test fixtures."""
        self.planner = Planner.for_robot('quadrant', 3)

    def _state(self, *verticals):
        return QuadrantState.of(3, verticals).to_rstate()

    def test_steps_plan(self):
        """Test that commuting moves share a step."""
        result = self.planner.plan(self._state(2), self._state(1, 3), 'steps')
        self.assertEqual(result.length, 1)
        self.assertEqual(set(result.steps[0]), {'hop_left@2', 'enter@3'})
        self.assertEqual(result.trace, ('ENE', 'NEN'))
        self.assertEqual(result.start, {'n': 3, 'verticals': [2]})

    def test_moves_plan(self):
        """Test that the moves metric uses single moves."""
        result = self.planner.plan(self._state(2), self._state(1, 3), Metric.MOVES)
        self.assertEqual(result.length, 2)
        self.assertEqual(result.move_count, 2)
        self.assertTrue(all(len(step) == 1 for step in result.steps))

    def test_enumerate_move_plans(self):
        """Test listing every plan with the fewest moves."""
        plans = list(self.planner.enumerate_move_plans(self._state(2), self._state(1, 3)))
        self.assertEqual(len(plans), 2)
        for p in plans:
            self.planner.replay(p)

    def test_same_state(self):
        """Test the empty plan."""
        result = self.planner.plan(self._state(2), self._state(2))
        self.assertEqual(result.steps, ())
        self.assertEqual(len(self.planner.replay(result)), 1)

    def test_full_turn(self):
        """Test planning from the horizontal arm to the vertical one."""
        result = self.planner.plan(self._state(), self._state(1, 2, 3), 'time')
        self.assertEqual(result.move_count, 6)
        self.assertEqual(result.length, 5)

    def test_euclidean(self):
        """Test that the planner refuses the euclidean metric."""
        with self.assertRaises(ValidationError):
            self.planner.plan(self._state(), self._state(1), 'euclidean')

    def test_invalid_state(self):
        """Test that states of the wrong length are rejected."""
        with self.assertRaises(StateError):
            self.planner.plan(QuadrantState.of(2, ()).to_rstate(), self._state(1))

    def test_tampered_plan(self):
        """Test that replay catches an edited plan."""
        result = self.planner.plan(self._state(), self._state(3))
        tampered = Plan(result.start, result.goal, result.metric, (('hop_right@1',),))
        with self.assertRaises(PlanError):
            self.planner.replay(tampered)

    def test_generic_planner(self):
        """Test planning through the reconstructed PIP of a system."""
        system = quadrant_system(2)
        result = plan(system, RState.decode('1=E;2=E'), RState.decode('1=N;2=N'))
        self.assertEqual(result.steps, (('enter@2',), ('hop_left@2',), ('enter@2',)))
        self.assertEqual(result.start, {'1': 'E', '2': 'E'})

    def test_generic_planner_agrees_with_arm_planner(self):
        """Test that both coders give plans of the same length."""
        generic = Planner.for_system(quadrant_system(3))
        start, goal = self._state(2), self._state(1, 3)
        self.assertEqual(generic.plan(start, goal).length, self.planner.plan(start, goal).length)
        self.assertEqual(len(generic.pip), 6)

    def test_not_cat0(self):
        """Test that a non-CAT(0) system cannot be planned on."""
        with self.assertRaises(NotCat0Error):
            Planner.for_system(snake_system(1, 1, 1))

    def test_coder_needs_a_bijection(self):
        """Test that a coder without encode and decode cannot be created."""
        with self.assertRaises(TypeError):
            StateCoder()
        coder = ArmCoder('quadrant', 3)
        self.assertIsInstance(coder, StateCoder)
        self.assertEqual(coder.decode(coder.encode(self._state(1, 3))), self._state(1, 3))


if __name__ == '__main__':
    unittest.main()
