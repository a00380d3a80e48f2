"""
Unit tests for the robotic arms: states, posets, partial paths and cube counts.
"""

import os
import sys
import unittest
from itertools import product

import pandas as pd

# Add the project root to the path so the package can be imported
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '../..')))

from cubeplan.arms import (
    FPath,
    PartialPath,
    QuadrantState,
    StripState,
    count_table,
    cube_counts,
    enumerate_partial_paths,
    fibonacci_word,
    join_irreducibles_check,
    partial_path_cube,
    q_ideal_to_state,
    q_state_to_ideal,
    qp_pip,
    refold,
    robot_system,
    s_ideal_to_state,
    s_state_to_ideal,
    sp_pip,
    state_count,
    strip_system,
    unfold,
    word_leq,
    word_order_agrees,
)
from cubeplan.arms.series import series_counts
from cubeplan.core.exceptions import CapExceededError, PipError, StateError, ValidationError
from cubeplan.pips import consistent_ideals
from cubeplan.reconfig import explore


def _valid_fpaths(n: int) -> set:
    """Every N/E word of length n that passes the pyramid check."""
    found = set()
    for letters in product('NE', repeat=n):
        try:
            FPath(n, ''.join(letters)).check()
        except StateError:
            continue
        found.add(''.join(letters))
    return found


def _one_move_apart(a: str, b: str) -> bool:
    """True when b is a with one NE/EN pair swapped or the last step flipped."""
    diff = [k for k in range(len(a)) if a[k] != b[k]]
    if diff == [len(a) - 1]:
        return True
    return (len(diff) == 2 and diff[1] == diff[0] + 1
            and a[diff[0]:diff[1] + 1] in ('NE', 'EN'))


class TestArmStates(unittest.TestCase):
    """Test cases for arm states."""

    def test_parse_digits(self):
        """Test the digit-string form."""
        self.assertEqual(QuadrantState.parse('12', 3).verticals, (1, 2))
        self.assertEqual(QuadrantState.parse('', 3).verticals, ())
        self.assertEqual(QuadrantState.parse('31', 3).verticals, (1, 3))

    def test_parse_commas(self):
        """Test the comma form used for long arms."""
        state = QuadrantState.parse('3,5,10', 10)
        self.assertEqual(state.verticals, (3, 5, 10))
        self.assertEqual(state.format(), '3,5,10')

    def test_parse_errors(self):
        """Test rejected state strings."""
        with self.assertRaises(StateError):
            QuadrantState.parse('11', 3)
        with self.assertRaises(StateError):
            QuadrantState.parse('4', 3)
        with self.assertRaises(StateError):
            QuadrantState.parse('x', 3)

    def test_strip_spacing(self):
        """Test that strip states keep north links apart."""
        with self.assertRaises(StateError):
            StripState.of(3, (1, 2))
        self.assertEqual(StripState.of(3, (1, 3)).verticals, (1, 3))

    def test_word_and_links(self):
        """Test the padded word and link directions."""
        state = QuadrantState.of(3, (2,))
        self.assertEqual(state.word(), (2, 4, 4))
        self.assertEqual(state.links(), 'ENE')

    def test_rstate_round_trip(self):
        """Test converting to and from system states."""
        state = StripState.of(4, (1, 4))
        rstate = state.to_rstate()
        self.assertEqual(rstate.encode(), '1=N;2=E;3=E;4=N')
        self.assertEqual(StripState.from_rstate(rstate, 4), state)
        self.assertEqual(StripState.from_dict(state.to_dict()), state)

    def test_all_states(self):
        """Test the number of arm states."""
        self.assertEqual(len(list(QuadrantState.all(3))), 8)
        self.assertEqual(len(list(StripState.all(4))), 8)
        self.assertEqual(state_count(5, 'quadrant'), 32)
        self.assertEqual(state_count(5, 'strip'), 13)
        with self.assertRaises(ValidationError):
            state_count(3, 'hexagon')


class TestArmPosets(unittest.TestCase):
    """Test cases for the arm posets and their bijections."""

    def test_sizes(self):
        """Test the number of elements of each poset."""
        self.assertEqual(len(qp_pip(3)), 6)
        self.assertEqual(len(sp_pip(3)), 4)
        self.assertEqual(len(sp_pip(4)), 6)
        with self.assertRaises(PipError):
            qp_pip(0)

    def test_ideal_counts(self):
        """Test that the posets have one ideal per arm state."""
        self.assertEqual(len(consistent_ideals(qp_pip(4))), 16)
        self.assertEqual(len(consistent_ideals(sp_pip(5))), 13)

    def test_quadrant_bijection(self):
        """Test that quadrant states and ideals correspond one to one."""
        n = 4
        ideals = set()
        for state in QuadrantState.all(n):
            ideal = q_state_to_ideal(state)
            self.assertEqual(q_ideal_to_state(n, ideal), state)
            ideals.add(ideal)
        self.assertEqual(ideals, set(consistent_ideals(qp_pip(n))))

    def test_strip_bijection(self):
        """Test that strip states and ideals correspond one to one."""
        n = 5
        ideals = set()
        for state in StripState.all(n):
            ideal = s_state_to_ideal(state)
            self.assertEqual(s_ideal_to_state(n, ideal), state)
            ideals.add(ideal)
        self.assertEqual(ideals, set(consistent_ideals(sp_pip(n))))

    def test_horizontal_arm_is_empty_ideal(self):
        """Test that the home state is the empty ideal."""
        self.assertEqual(q_state_to_ideal(QuadrantState.of(3, ())), 0)
        self.assertEqual(s_state_to_ideal(StripState.of(3, ())), 0)
        self.assertEqual(q_state_to_ideal(QuadrantState.of(3, (1, 2, 3))), qp_pip(3).full_mask)

    def test_not_an_ideal(self):
        """Test that decoding rejects non-ideals."""
        pip = qp_pip(2)
        with self.assertRaises(PipError):
            q_ideal_to_state(2, pip.bit('1,1'))


class TestPartialPaths(unittest.TestCase):
    """Test cases for partial paths and Fibonacci paths."""

    def test_resolutions(self):
        """Test resolving squares into arm positions."""
        path = PartialPath('QE')
        self.assertEqual(path.resolutions(), ['NEE', 'ENE'])
        self.assertEqual(path.length, 3)
        self.assertEqual(path.dimension, 1)
        self.assertEqual([s.verticals for s in path.resolve()], [(1,), (2,)])

    def test_invalid_paths(self):
        """Test rejected words."""
        with self.assertRaises(ValidationError):
            PartialPath('HN')
        with self.assertRaises(ValidationError):
            PartialPath('NN', 'strip')
        with self.assertRaises(ValidationError):
            PartialPath('X')

    def test_enumeration(self):
        """Test listing partial paths of small length."""
        words = [p.symbols for p in enumerate_partial_paths(2, 'strip')]
        self.assertEqual(words, ['EE', 'EH', 'EN', 'NE', 'Q'])
        self.assertEqual(len(list(enumerate_partial_paths(1))), 3)
        with self.assertRaises(CapExceededError):
            list(enumerate_partial_paths(3, cap=5))

    def test_partial_path_cube(self):
        """Test locating the cube of a partial path."""
        self.assertEqual(partial_path_cube(PartialPath('H')), (1, 1))
        self.assertEqual(partial_path_cube(PartialPath('N')), (1, 0))

    def test_fibonacci_word(self):
        """Test alternating north and south links."""
        self.assertEqual(fibonacci_word(StripState.of(5, (1, 3, 5))), 'NESEN')

    def test_unfold_refold(self):
        """Test the pyramid unfolding."""
        state = StripState.of(5, (1, 3, 5))
        path = unfold(state)
        self.assertEqual(path.steps, 'NENEN')
        self.assertEqual(path.points[-1], (2, 3))
        self.assertEqual(refold(path), state)

    def test_fpath_checks(self):
        """Test that F-paths stay in the pyramid."""
        with self.assertRaises(StateError):
            FPath(3, 'NNE').check()
        with self.assertRaises(StateError):
            FPath(3, 'NE').check()

    def test_unfold_long_arm(self):
        """Test unfolding an arm whose vertical links alternate N, S, N, S."""
        state = StripState.of(9, (1, 4, 7, 9))
        self.assertEqual(fibonacci_word(state), 'NEESEENES')
        self.assertEqual(unfold(state).steps, 'NEENEENEN')

    def test_unfold_is_a_bijection(self):
        """Test that unfolding matches strip states with F-paths one to one, up to length 8."""
        for n in range(1, 9):
            paths = {unfold(state).steps: state for state in StripState.all(n)}
            self.assertEqual(len(paths), state_count(n, 'strip'))
            self.assertEqual(set(paths), _valid_fpaths(n), msg=f'n={n}')
            for steps, state in paths.items():
                self.assertEqual(refold(FPath(n, steps)), state)

    def test_moves_are_local_path_changes(self):
        """Test that arm moves are exactly NE/EN switches and flips of the last step."""
        for n in range(1, 9):
            exploration = explore(strip_system(n))
            steps = [unfold(StripState.from_rstate(s, n)).steps for s in exploration.states]
            self.assertEqual(set(steps), _valid_fpaths(n))
            for i, a in enumerate(steps):
                for j in range(i + 1, len(steps)):
                    self.assertEqual(exploration.graph.has_edge(i, j), _one_move_apart(a, steps[j]),
                                     msg=f'{a} / {steps[j]}')


class TestSeries(unittest.TestCase):
    """Test cases for cube counts."""

    def test_quadrant_counts(self):
        """Test the quadrant arm counts."""
        self.assertEqual(cube_counts(1, 'quadrant'), (2, 1))
        self.assertEqual(cube_counts(2, 'quadrant'), (4, 3, 0))
        self.assertEqual(cube_counts(3, 'quadrant'), (8, 8, 1, 0))

    def test_strip_counts(self):
        """Test the strip arm counts."""
        self.assertEqual(cube_counts(1, 'strip'), (2, 1))
        self.assertEqual(cube_counts(2, 'strip'), (3, 2, 0))
        self.assertEqual(cube_counts(3, 'strip'), (5, 4, 0, 0))

    def test_methods_agree(self):
        """Test that both methods give the same counts."""
        for flavor in ('quadrant', 'strip'):
            for n in range(1, 8):
                self.assertEqual(cube_counts(n, flavor, 'series'), cube_counts(n, flavor, 'enumeration'))

    def test_series_limits(self):
        """Test rejected methods and orders."""
        with self.assertRaises(ValidationError):
            cube_counts(2, 'quadrant', 'guess')
        with self.assertRaises(CapExceededError):
            series_counts(100, 'quadrant', max_order=64)
        with self.assertRaises(ValidationError):
            series_counts(2, 'hexagon')

    def test_count_table(self):
        """Test the combined count table."""
        df = count_table([1, 2], 'quadrant')
        self.assertIsInstance(df, pd.DataFrame)
        self.assertEqual(list(df.columns), ['n', 'd', 'enumeration', 'series', 'match'])
        self.assertEqual(len(df), 5)
        self.assertTrue(df['match'].all())


class TestHomeOrderOfArms(unittest.TestCase):
    """Test cases for the join-irreducibles and the word order."""

    def test_join_irreducibles(self):
        """Test that join-irreducible states form the arm poset."""
        self.assertTrue(join_irreducibles_check(3, 'quadrant'))
        self.assertTrue(join_irreducibles_check(4, 'strip'))

    def test_word_order(self):
        """Test that the home order is the word order."""
        self.assertTrue(word_order_agrees(3, 'quadrant'))
        self.assertTrue(word_order_agrees(4, 'strip'))
        self.assertTrue(word_leq(QuadrantState.of(2, ()), QuadrantState.of(2, (2,))))
        self.assertFalse(word_leq(QuadrantState.of(2, (1,)), QuadrantState.of(2, (2,))))

    def test_unknown_robot(self):
        """Test that only the two arms are built in."""
        with self.assertRaises(ValidationError):
            robot_system('hexagon', 2)
        with self.assertRaises(ValidationError):
            join_irreducibles_check(2, 'hexagon')


if __name__ == '__main__':
    unittest.main()
