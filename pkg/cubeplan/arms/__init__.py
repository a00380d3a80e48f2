"""Robotic arms in a quadrant and in a strip, and the unpinned snake."""
from .join_irreducibles import arm_order, arm_pip, join_irreducibles_check, word_leq, word_order_agrees
from .paths import FPath, PartialPath, enumerate_partial_paths, fibonacci_word, partial_path_cube, refold, unfold
from .posets import q_ideal_to_state, q_state_to_ideal, qp_pip, s_ideal_to_state, s_state_to_ideal, sp_pip
from .series import GENERATING_FUNCTIONS, count_table, cube_counts, series_coefficients, state_count
from .states import ArmState, QuadrantState, StripState
from .systems import quadrant_system, robot_system, snake_system, strip_system

__all__ = [
    'ArmState',
    'FPath',
    'GENERATING_FUNCTIONS',
    'PartialPath',
    'QuadrantState',
    'StripState',
    'arm_order',
    'arm_pip',
    'count_table',
    'cube_counts',
    'enumerate_partial_paths',
    'fibonacci_word',
    'join_irreducibles_check',
    'partial_path_cube',
    'q_ideal_to_state',
    'q_state_to_ideal',
    'qp_pip',
    'quadrant_system',
    'refold',
    'robot_system',
    's_ideal_to_state',
    's_state_to_ideal',
    'series_coefficients',
    'snake_system',
    'sp_pip',
    'state_count',
    'strip_system',
    'unfold',
    'word_leq',
    'word_order_agrees',
]
