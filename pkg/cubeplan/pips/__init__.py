"""Posets with inconsistent pairs and their ideals."""
from .hasse import render_hasse
from .ideals import (
    consistent_ideals,
    depth,
    is_consistent_ideal,
    iter_linear_extensions,
    linear_extensions,
    require_ideal,
)
from .pip import Pip, ValidationReport, iter_bits, pip_isomorphism, pips_isomorphic, validate
from .reroot import reroot, rerooted_ideal

__all__ = [
    'Pip',
    'ValidationReport',
    'consistent_ideals',
    'depth',
    'is_consistent_ideal',
    'iter_bits',
    'iter_linear_extensions',
    'linear_extensions',
    'pip_isomorphism',
    'pips_isomorphic',
    'render_hasse',
    'require_ideal',
    'reroot',
    'rerooted_ideal',
    'validate',
]
