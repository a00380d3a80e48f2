"""Reconfigurable systems, their exploration and state complexes."""
from .explorer import Exploration, StateExplorer, cube_corners, explore, state_complex
from .home_order import StateOrder, home_order
from .system import Generator, ReconfigSystem, RState, admissible, apply, commute, generators_commute

__all__ = [
    'Exploration',
    'Generator',
    'RState',
    'ReconfigSystem',
    'StateExplorer',
    'StateOrder',
    'admissible',
    'apply',
    'commute',
    'cube_corners',
    'explore',
    'generators_commute',
    'home_order',
    'state_complex',
]
