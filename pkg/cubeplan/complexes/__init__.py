"""Rooted cube complexes, their PIPs and isomorphism tests."""
from .cube_complex import Cube, CubeComplex, complex_from_pip, empty_squares, f_vector
from .isomorphism import IsomorphismResult, rooted_isomorphic
from .reconstruction import (
    NotCat0Report,
    Reconstruction,
    hyperplanes,
    is_cat0,
    reconstruct,
    reconstruct_pip,
)

__all__ = [
    'Cube',
    'CubeComplex',
    'IsomorphismResult',
    'NotCat0Report',
    'Reconstruction',
    'complex_from_pip',
    'empty_squares',
    'f_vector',
    'hyperplanes',
    'is_cat0',
    'reconstruct',
    'reconstruct_pip',
    'rooted_isomorphic',
]
