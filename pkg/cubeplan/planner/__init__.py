"""Optimal plans for the moves, steps and time metrics."""
from .coders import ArmCoder, ReconstructionCoder, StateCoder
from .plan import (
    CubePath,
    Metric,
    Plan,
    check_cube_path,
    cube_path,
    goal_ideal,
    iter_shortest_move_plans,
    makespan,
    normal_cube_path,
    reverse_normal_cube_path,
    shortest_move_plan,
)
from .planner import Planner, plan, replay

__all__ = [
    'ArmCoder',
    'CubePath',
    'Metric',
    'Plan',
    'Planner',
    'ReconstructionCoder',
    'StateCoder',
    'check_cube_path',
    'cube_path',
    'goal_ideal',
    'iter_shortest_move_plans',
    'makespan',
    'normal_cube_path',
    'plan',
    'replay',
    'reverse_normal_cube_path',
    'shortest_move_plan',
]
