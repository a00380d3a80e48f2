"""
Command-line entry point for the cube complex planner.

Subcommands:
    pip      show | validate | reroot | export
    robot    plan | verify | system
    count    cubes | states | fvector
    complex  check-cat0 | show

Data goes to stdout, logs and errors to stderr. Errors print a one-line
JSON object and exit with 2 (invalid input), 3 (cap exceeded) or
4 (not CAT(0)).
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

import pandas as pd

from .arms import ArmState, QuadrantState, StripState, arm_pip, robot_system, snake_system
from .arms.series import METHOD_ENUMERATION, METHOD_SERIES, cube_counts, series_counts, state_count
from .complexes import CubeComplex, NotCat0Report, complex_from_pip, f_vector, reconstruct
from .config.constants import (
    EXIT_INTERRUPTED,
    EXIT_NOT_CAT0,
    EXIT_OK,
    EXIT_VALIDATION,
    LOG_LEVELS,
    METRIC_EUCLIDEAN,
    METRIC_STEPS,
    METRICS,
    QUADRANT,
    ROBOT_KINDS,
    SNAKE,
    STRIP,
)
from .config.settings import PlannerSettings, load_settings
from .core.exceptions import CubePlanError, PipError, SeriesMismatchError, ValidationError
from .core.file_manager import FileManager, dumps
from .core.logger import configure_logging
from .pips import render_hasse, reroot, validate
from .planner import Plan, Planner
from .reconfig import ReconfigSystem, RState, explore, state_complex

logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace, PlannerSettings], int]


# -- argument parsing ---------------------------------------------------------

def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help='Machine-readable output')
    common.add_argument(
        '--log-level',
        type=str.upper,
        default=None,
        choices=list(LOG_LEVELS),
        help='Set the logging level (default: LOG_LEVEL or WARNING)'
    )
    common.add_argument('--progress', action='store_true', help='Show progress bars')
    common.add_argument('--config', default=None, help='Path to a JSON settings file')
    common.add_argument('--max-states', type=int, default=None, help='Cap on explored states')
    common.add_argument('--max-ideals', type=int, default=None, help='Cap on consistent ideals')
    common.add_argument('--max-enumeration', type=int, default=None,
                        help='Cap on enumerated paths and plans')
    return common


def _add_robot_args(parser: argparse.ArgumentParser, kinds=ROBOT_KINDS) -> None:
    parser.add_argument('--type', dest='kind', required=True, choices=list(kinds), help='Robot type')
    parser.add_argument('--n', type=int, required=True, help='Arm length (snake: number of links)')


def _add_source_args(parser: argparse.ArgumentParser, complex_file: bool = False) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    if complex_file:
        source.add_argument('--complex', dest='complex_file', help='Cube complex JSON file')
    source.add_argument('--system', help='System description JSON file')
    source.add_argument('--type', dest='kind', choices=[QUADRANT, STRIP, SNAKE], help='Built-in system')
    parser.add_argument('--n', type=int, help='Arm length (snake: number of links)')
    parser.add_argument('--rows', type=int, default=1, help='Snake grid rows (default: 1)')
    parser.add_argument('--cols', type=int, default=None, help='Snake grid columns')


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """
    Parse command-line arguments.

    Returns:
        Parsed arguments namespace with a ``handler`` attribute
    """
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog='cubeplan',
        description='Plan optimal motions of reconfigurable systems through CAT(0) cube complexes.'
    )
    groups = parser.add_subparsers(dest='group', required=True)

    # pip
    pip_parser = groups.add_parser('pip', help='Posets with inconsistent pairs')
    pip_commands = pip_parser.add_subparsers(dest='command', required=True)

    show = pip_commands.add_parser('show', parents=[common], help='Print the Hasse diagram of a PIP')
    show.add_argument('file', help='PIP file (.pip.json)')
    show.set_defaults(handler=cmd_pip_show)

    check = pip_commands.add_parser('validate', parents=[common], help='Check the PIP axioms')
    check.add_argument('file', help='PIP file (.pip.json)')
    check.add_argument('--closed', action='store_true',
                       help='Also require the inconsistent pairs to be upward closed')
    check.set_defaults(handler=cmd_pip_validate)

    rerooting = pip_commands.add_parser('reroot', parents=[common], help='Reroot a PIP at a consistent ideal')
    rerooting.add_argument('file', help='PIP file (.pip.json)')
    rerooting.add_argument('--at', nargs='*', default=[], metavar='ELEMENT',
                           help='Elements of the new root ideal (none: the empty ideal)')
    rerooting.add_argument('--output', help='Write the rerooted PIP here')
    rerooting.set_defaults(handler=cmd_pip_reroot)

    export = pip_commands.add_parser('export', parents=[common], help='Write the PIP of an arm')
    _add_robot_args(export)
    export.add_argument('--output', help='Output file (default: stdout)')
    export.set_defaults(handler=cmd_pip_export)

    # robot
    robot_parser = groups.add_parser('robot', help='Robotic arms')
    robot_commands = robot_parser.add_subparsers(dest='command', required=True)

    planning = robot_commands.add_parser('plan', parents=[common], help='Plan an optimal motion')
    _add_robot_args(planning)
    planning.add_argument('--from', dest='start', required=True, help='Start state, e.g. "" or 2')
    planning.add_argument('--to', dest='goal', required=True, help='Goal state, e.g. 12')
    planning.add_argument('--metric', default=METRIC_STEPS, type=str.lower,
                          choices=list(METRICS) + [METRIC_EUCLIDEAN], help='Metric to optimize')
    planning.add_argument('--reverse', action='store_true',
                          help='Use the reverse normal cube path for steps and time')
    planning.add_argument('--enumerate', action='store_true',
                          help='List every plan with the fewest moves')
    planning.add_argument('--verify', action='store_true', help='Report the replay of the plan')
    planning.add_argument('--output', help='Write the plan JSON here')
    planning.set_defaults(handler=cmd_robot_plan)

    verify = robot_commands.add_parser('verify', parents=[common], help='Replay a plan file')
    verify.add_argument('--plan', dest='plan_file', required=True, help='Plan JSON file')
    verify.add_argument('--type', dest='kind', required=True, choices=list(ROBOT_KINDS), help='Robot type')
    verify.add_argument('--n', type=int, default=None, help='Arm length (default: from the plan)')
    verify.set_defaults(handler=cmd_robot_verify)

    system = robot_commands.add_parser('system', parents=[common], help='Write a system description')
    _add_robot_args(system, kinds=(QUADRANT, STRIP, SNAKE))
    system.add_argument('--rows', type=int, default=1, help='Snake grid rows (default: 1)')
    system.add_argument('--cols', type=int, default=None, help='Snake grid columns')
    system.add_argument('--output', help='Output file (default: stdout)')
    system.set_defaults(handler=cmd_robot_system)

    # count
    count_parser = groups.add_parser('count', help='Counts of states and cubes')
    count_commands = count_parser.add_subparsers(dest='command', required=True)

    cubes = count_commands.add_parser('cubes', parents=[common], help='Cubes by dimension')
    cubes.add_argument('--type', dest='kind', required=True, choices=list(ROBOT_KINDS), help='Robot type')
    cubes.add_argument('--n', type=int, nargs='+', required=True, help='Arm length(s)')
    cubes.add_argument('--method', default='both', choices=['both', METHOD_SERIES, METHOD_ENUMERATION],
                       help='Counting method (default: both, which must agree)')
    cubes.add_argument('--output', help='Write the CSV table here')
    cubes.set_defaults(handler=cmd_count_cubes)

    states = count_commands.add_parser('states', parents=[common], help='Number of states')
    states.add_argument('--type', dest='kind', required=True, choices=list(ROBOT_KINDS), help='Robot type')
    states.add_argument('--n', type=int, nargs='+', required=True, help='Arm length(s)')
    states.add_argument('--formula-only', action='store_true', help='Skip the exploration cross-check')
    states.add_argument('--output', help='Write the CSV table here')
    states.set_defaults(handler=cmd_count_states)

    fvector = count_commands.add_parser('fvector', parents=[common],
                                        help='f-vector of the explored state complex against the series')
    fvector.add_argument('--type', dest='kind', required=True, choices=list(ROBOT_KINDS), help='Robot type')
    fvector.add_argument('--n', type=int, nargs='+', required=True, help='Arm length(s)')
    fvector.add_argument('--output', help='Write the CSV table here')
    fvector.set_defaults(handler=cmd_count_fvector)

    # complex
    complex_parser = groups.add_parser('complex', help='State complexes')
    complex_commands = complex_parser.add_subparsers(dest='command', required=True)

    cat0 = complex_commands.add_parser('check-cat0', parents=[common],
                                       help='Decide whether a state complex is CAT(0)')
    _add_source_args(cat0, complex_file=True)
    cat0.add_argument('--root', default=None,
                      help='Root state as vertex=symbol;... or, with --complex, a vertex id (default: the seed)')
    cat0.set_defaults(handler=cmd_complex_check_cat0)

    show_complex = complex_commands.add_parser('show', parents=[common], help='Summarize a cube complex')
    source = show_complex.add_mutually_exclusive_group(required=True)
    source.add_argument('--pip', dest='pip_file', help='Build X(P) from a PIP file')
    source.add_argument('--system', help='System description JSON file')
    source.add_argument('--type', dest='kind', choices=[QUADRANT, STRIP, SNAKE], help='Built-in system')
    show_complex.add_argument('--n', type=int, help='Arm length (snake: number of links)')
    show_complex.add_argument('--rows', type=int, default=1, help='Snake grid rows (default: 1)')
    show_complex.add_argument('--cols', type=int, default=None, help='Snake grid columns')
    show_complex.add_argument('--output', help='Write the complex JSON here')
    show_complex.set_defaults(handler=cmd_complex_show)

    return parser.parse_args(argv)


# -- helpers ------------------------------------------------------------------

def emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def emit_json(data: Any) -> None:
    sys.stdout.write(dumps(data))


def emit_table(df: pd.DataFrame, args: argparse.Namespace) -> None:
    if getattr(args, 'output', None):
        FileManager().save_dataframe(df, args.output)
    elif args.json:
        emit_json(df.to_dict(orient='records'))
    else:
        sys.stdout.write(df.to_csv(index=False))


def _state_class(kind: str):
    return QuadrantState if kind == QUADRANT else StripState


def _parse_arm_state(kind: str, text: str, n: int) -> ArmState:
    return _state_class(kind).parse(text, n)


def _arm_label(state: ArmState) -> str:
    return state.format() or '-'


def _load_source(args: argparse.Namespace) -> ReconfigSystem:
    """The system named by --system or --type/--n/--rows/--cols."""
    if getattr(args, 'system', None):
        return FileManager().load_system(args.system)
    if args.n is None:
        raise ValidationError(f"--n is required with --type {args.kind}")
    if args.kind == SNAKE:
        cols = args.cols if args.cols is not None else args.n
        return snake_system(args.n, args.rows, cols)
    return robot_system(args.kind, args.n)


def _progress(args: argparse.Namespace) -> bool:
    return args.progress or logging.getLogger("cubeplan").getEffectiveLevel() <= logging.INFO


# -- pip ----------------------------------------------------------------------

def cmd_pip_show(args: argparse.Namespace, settings: PlannerSettings) -> int:
    pip = FileManager().load_pip(args.file)
    if args.json:
        emit_json(pip.to_dict())
    else:
        emit(render_hasse(pip))
    return EXIT_OK


def cmd_pip_validate(args: argparse.Namespace, settings: PlannerSettings) -> int:
    pip = FileManager().load_pip(args.file)
    report = validate(pip, closed=args.closed)
    if args.json:
        emit_json({
            "ok": report.ok,
            "axiom": report.axiom,
            "witness": list(report.witness),
            "message": report.message,
        })
    elif report.ok:
        emit(f"ok: {len(pip)} elements")
    if not report.ok:
        raise PipError(report.message)
    return EXIT_OK


def cmd_pip_reroot(args: argparse.Namespace, settings: PlannerSettings) -> int:
    pip = FileManager().load_pip(args.file)
    report = validate(pip)
    if not report:
        raise PipError(report.message)
    rerooted = reroot(pip, pip.mask_of(args.at))
    if args.output:
        FileManager().save_pip(rerooted, args.output)
    elif args.json:
        emit_json(rerooted.to_dict())
    else:
        emit(render_hasse(rerooted))
    return EXIT_OK


def cmd_pip_export(args: argparse.Namespace, settings: PlannerSettings) -> int:
    pip = arm_pip(args.n, args.kind)
    if args.output:
        FileManager().save_pip(pip, args.output)
    else:
        emit_json(pip.to_dict())
    return EXIT_OK


# -- robot --------------------------------------------------------------------

def _print_plan(plan: Plan, header: str) -> None:
    lines = [f"{header}: {plan.length} step(s), {plan.move_count} move(s)"]
    width = len(str(plan.length))
    lines.append(f"  {0:>{width}}  {plan.trace[0]}")
    for k, (step, state) in enumerate(zip(plan.steps, plan.trace[1:]), start=1):
        lines.append(f"  {k:>{width}}  {state}  <- {' + '.join(step)}")
    emit("\n".join(lines))


def cmd_robot_plan(args: argparse.Namespace, settings: PlannerSettings) -> int:
    planner = Planner.for_robot(args.kind, args.n)
    start = _parse_arm_state(args.kind, args.start, args.n)
    goal = _parse_arm_state(args.kind, args.goal, args.n)
    header = f"{args.kind} n={args.n}: {_arm_label(start)} -> {_arm_label(goal)}"

    if args.enumerate:
        plans = list(planner.enumerate_move_plans(start.to_rstate(), goal.to_rstate(),
                                                  settings.max_enumeration))
        if args.json:
            emit_json([p.to_dict() for p in plans])
        else:
            emit(f"{header}: {len(plans)} plan(s) with the fewest moves")
            for p in plans:
                emit("  " + " , ".join(" + ".join(step) for step in p.steps))
        return EXIT_OK

    plan = planner.plan(start.to_rstate(), goal.to_rstate(), args.metric, reverse=args.reverse)
    if args.output:
        FileManager().save_plan(plan, args.output)
    if args.json:
        emit_json(plan.to_dict())
    else:
        _print_plan(plan, f"{header} ({plan.metric})")
    if args.verify:
        visited = planner.replay(plan)
        logger.info(f"Replayed {len(visited) - 1} step(s)")
        if not args.json:
            emit(f"replay: ok ({len(visited)} states)")
    return EXIT_OK


def cmd_robot_verify(args: argparse.Namespace, settings: PlannerSettings) -> int:
    plan = FileManager().load_plan(args.plan_file)
    n = args.n
    if n is None:
        try:
            n = int(plan.start["n"])
        except (KeyError, TypeError, ValueError):
            raise ValidationError("plan start state has no arm length; pass --n") from None
    planner = Planner.for_robot(args.kind, n)
    visited = planner.replay(plan)
    if args.json:
        emit_json({"ok": True, "length": plan.length, "states": len(visited)})
    else:
        emit(f"ok: {plan.length} step(s) replayed, goal reached")
    return EXIT_OK


def cmd_robot_system(args: argparse.Namespace, settings: PlannerSettings) -> int:
    system = _load_source(args)
    if args.output:
        FileManager().save_system(system, args.output)
    else:
        emit_json(system.to_dict())
    return EXIT_OK


# -- count --------------------------------------------------------------------

def cmd_count_cubes(args: argparse.Namespace, settings: PlannerSettings) -> int:
    rows = []
    for n in args.n:
        counts = cube_counts(n, args.kind, args.method, settings.max_enumeration, settings.max_series_order)
        rows.extend({"n": n, "d": d, "count": c} for d, c in enumerate(counts) if c)
    emit_table(pd.DataFrame(rows, columns=["n", "d", "count"]), args)
    return EXIT_OK


def cmd_count_states(args: argparse.Namespace, settings: PlannerSettings) -> int:
    rows = []
    for n in args.n:
        expected = state_count(n, args.kind)
        if not args.formula_only:
            found = len(explore(robot_system(args.kind, n), settings.max_states, _progress(args)))
            if found != expected:
                raise SeriesMismatchError(f"{args.kind} n={n}: explored {found} states, expected {expected}")
        rows.append({"n": n, "states": expected})
    emit_table(pd.DataFrame(rows, columns=["n", "states"]), args)
    return EXIT_OK


def cmd_count_fvector(args: argparse.Namespace, settings: PlannerSettings) -> int:
    rows = []
    for n in args.n:
        complex_ = state_complex(robot_system(args.kind, n), settings.max_states,
                                 settings.max_cube_dimension, _progress(args))
        found = f_vector(complex_, n + 1)
        expected = series_counts(n, args.kind, settings.max_series_order)
        for d in range(n + 1):
            rows.append({"n": n, "d": d, "fvector": found[d], "series": expected[d],
                         "match": found[d] == expected[d]})
    df = pd.DataFrame(rows, columns=["n", "d", "fvector", "series", "match"])
    emit_table(df, args)
    if not df["match"].all():
        bad = df.loc[~df["match"]].iloc[0]
        raise SeriesMismatchError(f"{args.kind} n={bad['n']} d={bad['d']}: f-vector {bad['fvector']} "
                                  f"but the series gives {bad['series']}")
    return EXIT_OK


# -- complex ------------------------------------------------------------------

def _complex_root(complex_: CubeComplex, text: Optional[str]):
    """The vertex of a complex file named by --root (default: the file's root)."""
    if text is None:
        return complex_.root
    for vertex in complex_.vertices:
        if str(vertex) == text:
            return vertex
    raise ValidationError(f"root {text!r} is not a vertex of the complex")


def cmd_complex_check_cat0(args: argparse.Namespace, settings: PlannerSettings) -> int:
    if args.complex_file:
        complex_ = FileManager().load_complex(args.complex_file)
        root = _complex_root(complex_, args.root)
        name = Path(args.complex_file).stem
    else:
        system = _load_source(args)
        exploration = explore(system, settings.max_states, _progress(args))
        complex_ = state_complex(exploration, max_dimension=settings.max_cube_dimension,
                                 progress=_progress(args))
        root = 0
        if args.root is not None:
            state = system.validate_state(RState.decode(args.root))
            if state not in exploration.index:
                raise ValidationError(f"root state {state.encode()} is not reachable from the seed")
            root = exploration.index[state]
        name = system.name
    result = reconstruct(complex_, root, settings.max_ideals)

    if isinstance(result, NotCat0Report):
        if args.json:
            emit_json(result.to_dict())
        else:
            emit(f"{name}: {result.describe()}")
        return EXIT_NOT_CAT0

    states = len(complex_.vertices)
    if args.json:
        emit_json({"cat0": True, "states": states, "pip": result.pip.to_dict()})
    else:
        emit(f"{name}: CAT(0), {states} states, PIP with {len(result.pip)} elements")
        emit(render_hasse(result.pip))
    return EXIT_OK


def cmd_complex_show(args: argparse.Namespace, settings: PlannerSettings) -> int:
    if args.pip_file:
        pip = FileManager().load_pip(args.pip_file)
        report = validate(pip)
        if not report:
            raise PipError(report.message)
        complex_: CubeComplex = complex_from_pip(pip, settings.max_ideals, settings.max_cube_dimension)
        name = args.pip_file
    else:
        system = _load_source(args)
        complex_ = state_complex(system, settings.max_states, settings.max_cube_dimension, _progress(args))
        name = system.name
    length = args.n + 1 if args.kind in ROBOT_KINDS and args.n is not None else None
    counts = f_vector(complex_, length)
    if args.output:
        FileManager().save_complex(complex_, args.output)
    if args.json:
        emit_json({"name": name, "f_vector": list(counts), "dimension": complex_.dimension,
                   "connected": complex_.is_connected()})
    else:
        emit(f"{name}: {len(complex_.vertices)} vertices, dimension {complex_.dimension}, "
             f"f-vector {list(counts)}")
    return EXIT_OK


# -- entry point --------------------------------------------------------------

def _error(data: Dict[str, Any]) -> None:
    sys.stderr.write(json.dumps(data) + "\n")


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one command.

    Returns:
        The process exit code
    """
    args = parse_args(argv)
    settings = load_settings(args.config).override(
        max_states=args.max_states,
        max_ideals=args.max_ideals,
        max_enumeration=args.max_enumeration,
        log_level=args.log_level,
    )
    configure_logging(settings.log_level, settings.log_to_file)
    handler: Handler = args.handler
    try:
        return handler(args, settings)
    except CubePlanError as e:
        logger.debug(f"{args.group} {args.command} failed", exc_info=True)
        _error(e.to_dict())
        return e.exit_code
    except FileNotFoundError as e:
        _error({"error": "FileNotFoundError", "message": str(e), "exit_code": EXIT_VALIDATION})
        return EXIT_VALIDATION
    except KeyboardInterrupt:
        _error({"error": "KeyboardInterrupt", "message": "interrupted", "exit_code": EXIT_INTERRUPTED})
        return EXIT_INTERRUPTED


if __name__ == '__main__':
    sys.exit(main())
