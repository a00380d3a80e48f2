"""
Unit tests for cube complexes, reconstruction and rooted isomorphism.
"""

import os
import sys
import unittest

# Add the project root to the path so the package can be imported
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '../..')))

from cubeplan.complexes import (
    Cube,
    CubeComplex,
    NotCat0Report,
    Reconstruction,
    complex_from_pip,
    empty_squares,
    f_vector,
    hyperplanes,
    is_cat0,
    reconstruct,
    reconstruct_pip,
    rooted_isomorphic,
)
from cubeplan.core.exceptions import CapExceededError, ValidationError
from cubeplan.pips import Pip, pips_isomorphic, reroot


def _square_cycle() -> CubeComplex:
    """Four edges around a missing square."""
    return CubeComplex.from_dict({
        'vertices': [0, 1, 2, 3],
        'cubes': [[0, 1], [1, 2], [2, 3], [0, 3]],
        'root': 0,
    })


class TestComplexFromPip(unittest.TestCase):
    """Test cases for building X(P)."""

    def test_chain(self):
        """Test that a chain gives a path."""
        complex_ = complex_from_pip(Pip.build(['a', 'b'], [('a', 'b')]))
        self.assertEqual(f_vector(complex_), (3, 2))
        self.assertEqual(complex_.vertices, (0, 1, 3))
        self.assertEqual(complex_.root, 0)

    def test_antichain_gives_square(self):
        """Test that two free elements span a square."""
        complex_ = complex_from_pip(Pip.build(['a', 'b']))
        self.assertEqual(f_vector(complex_), (4, 4, 1))
        self.assertEqual(complex_.dimension, 2)
        self.assertEqual(empty_squares(complex_), [])

    def test_inconsistent_pair_gives_corner(self):
        """Test that an inconsistent pair removes the square."""
        complex_ = complex_from_pip(Pip.build(['a', 'b'], [], [('a', 'b')]))
        self.assertEqual(f_vector(complex_), (3, 2))

    def test_cube_labels(self):
        """Test that every cube remembers its ideal and removable elements."""
        complex_ = complex_from_pip(Pip.build(['a', 'b']))
        square = complex_.cubes_of_dim(2)[0]
        self.assertEqual(square.label, (3, 3))
        self.assertEqual(square.verts, frozenset({0, 1, 2, 3}))

    def test_dimension_cap(self):
        """Test that the cube dimension cap is enforced."""
        with self.assertRaises(CapExceededError):
            complex_from_pip(Pip.build(['a', 'b', 'c']), max_dimension=2)

    def test_f_vector_padding(self):
        """Test padding the f-vector with zeros."""
        complex_ = complex_from_pip(Pip.build(['a']))
        self.assertEqual(f_vector(complex_, 4), (2, 1, 0, 0))

    def test_dict_round_trip(self):
        """Test reading back the JSON form."""
        complex_ = complex_from_pip(Pip.build(['a', 'b', 'c'], [('a', 'c')]))
        data = complex_.to_dict()
        self.assertTrue(all(len(cube['verts']) > 1 for cube in data['cubes']))
        again = CubeComplex.from_dict(data)
        self.assertEqual(f_vector(again), f_vector(complex_))
        self.assertEqual(again.to_dict(), data)


class TestCubeComplex(unittest.TestCase):
    """Test cases for explicit complexes."""

    def test_unknown_root(self):
        """Test that the root must be a vertex."""
        with self.assertRaises(ValidationError):
            CubeComplex.from_dict({'vertices': [0, 1], 'cubes': [[0, 1]], 'root': 5})

    def test_structure_problems(self):
        """Test that a three-vertex cube is reported."""
        cubes = tuple(Cube(frozenset([v])) for v in (0, 1, 2)) + (Cube(frozenset([0, 1, 2])),)
        complex_ = CubeComplex((0, 1, 2), cubes, 0)
        self.assertEqual(complex_.edges, ())
        problems = complex_.check_structure()
        self.assertTrue(any('has 3 vertices' in problem for problem in problems))

    def test_malformed_dict(self):
        """Test that reading a malformed complex raises a validation error."""
        bad = [
            {'vertices': [0, 1, 2], 'cubes': [[0, 1, 2]], 'root': 0},
            {'vertices': [0, 1], 'cubes': [[0, 7]], 'root': 0},
            {'vertices': [0, 1], 'cubes': [5], 'root': 0},
            {'vertices': [[0], [1]], 'cubes': [], 'root': [0]},
            {'vertices': [0, 1, 2, 3], 'cubes': [[0, 1, 2, 3]], 'root': 0},
        ]
        for data in bad:
            with self.assertRaises(ValidationError, msg=str(data)):
                CubeComplex.from_dict(data)

    def test_empty_squares(self):
        """Test finding a 4-cycle that bounds no square."""
        self.assertEqual(empty_squares(_square_cycle()), [(0, 1, 2, 3)])

    def test_hyperplanes(self):
        """Test that opposite sides of a square share a hyperplane."""
        complex_ = complex_from_pip(Pip.build(['a', 'b']))
        planes = hyperplanes(complex_)
        self.assertEqual(len(planes), 2)
        self.assertTrue(all(len(group) == 2 for group in planes))
        self.assertEqual(len(hyperplanes(_square_cycle())), 4)


class TestReconstruction(unittest.TestCase):
    """Test cases for recovering the PIP of a complex."""

    def test_round_trip(self):
        """Test that X(P) gives back P."""
        pip = Pip.build(['a', 'b', 'c', 'd'], [('a', 'b'), ('a', 'c')], [('b', 'd')])
        result = reconstruct(complex_from_pip(pip))
        self.assertIsInstance(result, Reconstruction)
        self.assertTrue(pips_isomorphic(result.pip, pip))
        self.assertEqual(len(result.hyperplanes), 4)
        self.assertEqual(result.vertex_ideals[0], 0)

    def test_vertex_labels_are_ideals(self):
        """Test that every vertex is labelled by a distinct ideal."""
        pip = Pip.build(['a', 'b', 'c'], [('a', 'b')])
        result = reconstruct(complex_from_pip(pip))
        self.assertEqual(len(set(result.vertex_ideals.values())), 6)
        for vertex, ideal in result.vertex_ideals.items():
            self.assertEqual(result.ideal_vertices[ideal], vertex)

    def test_rerooted_complex(self):
        """Test that X(P_a) is X(P) rooted at a."""
        pip = Pip.build(['a', 'b', 'c'], [('a', 'b'), ('b', 'c')])
        complex_ = complex_from_pip(pip)
        moved = complex_from_pip(reroot(pip, 1))
        self.assertTrue(rooted_isomorphic(moved, complex_.rerooted(1)))
        self.assertTrue(pips_isomorphic(reconstruct_pip(complex_, 1), reroot(pip, 1)))

    def test_root_matters(self):
        """Test that a path rooted at an end differs from one rooted inside."""
        complex_ = complex_from_pip(Pip.build(['a', 'b', 'c'], [('a', 'b'), ('b', 'c')]))
        result = rooted_isomorphic(complex_, complex_.rerooted(1))
        self.assertFalse(result)
        self.assertEqual(result.reason, 'vertex cube profiles differ')

    def test_not_cat0(self):
        """Test the report for a missing square."""
        report = reconstruct(_square_cycle())
        self.assertIsInstance(report, NotCat0Report)
        self.assertEqual(report.reason, 'hyperplane labels disagree along an edge')
        self.assertEqual(report.empty_squares, ((0, 1, 2, 3),))
        self.assertFalse(is_cat0(_square_cycle()))
        self.assertTrue(report.describe().startswith('not CAT(0): '))
        self.assertFalse(report.to_dict()['cat0'])

    def test_disconnected(self):
        """Test that a disconnected complex is rejected."""
        complex_ = CubeComplex.from_dict({'vertices': [0, 1, 2], 'cubes': [[0, 1]], 'root': 0})
        with self.assertRaises(ValidationError):
            reconstruct(complex_)


if __name__ == '__main__':
    unittest.main()
