"""
Acceptance checks for the cube complex planner.

Each step recomputes one family of results exhaustively over small
instances and compares independent computations:
1. State counts of the arms
2. Cube counts: partial paths, generating functions and explored f-vectors
3. Rooted isomorphism of the arm state complexes with X(QP_n) and X(SP_n)
4. PIP round trip through X(P) and reconstruction
5. Rerooting
6. Plan lengths against breadth-first oracles, for every metric
7. Snakes whose state complexes are not CAT(0)
8. Join-irreducible arm states
"""

import argparse
import logging
import os
import sys
import time
from itertools import combinations, product
from typing import Callable, List, Tuple

import networkx as nx
import numpy as np
from dotenv import load_dotenv
from tqdm import tqdm

# Add project root to path to allow imports
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from cubeplan.arms import (
    cube_counts,
    join_irreducibles_check,
    qp_pip,
    robot_system,
    snake_system,
    sp_pip,
    state_count,
    word_order_agrees,
)
from cubeplan.arms.series import METHOD_ENUMERATION, series_counts
from cubeplan.complexes import (
    NotCat0Report,
    Reconstruction,
    complex_from_pip,
    empty_squares,
    f_vector,
    reconstruct,
    reconstruct_pip,
    rooted_isomorphic,
)
from cubeplan.config.constants import LOG_FORMAT, LOG_LEVELS, QUADRANT, STRIP
from cubeplan.pips import Pip, consistent_ideals, depth, linear_extensions, pips_isomorphic, reroot, validate
from cubeplan.planner import Metric, Planner, makespan
from cubeplan.reconfig import explore, state_complex


def parse_args():
    """Parse command line arguments.

    Returns:
        Parsed arguments
    """
    load_dotenv()

    parser = argparse.ArgumentParser(
        description='Run the acceptance checks of the cube complex planner'
    )
    for step in STEP_NAMES:
        parser.add_argument(
            f'--skip-{step}',
            action='store_true',
            help=f'Skip the {step.replace("-", " ")} step'
        )
    parser.add_argument('--quadrant-states', type=int, default=12, help='Largest quadrant arm for state counts')
    parser.add_argument('--strip-states', type=int, default=18, help='Largest strip arm for state counts')
    parser.add_argument('--series-n', type=int, default=12, help='Largest arm for series against paths')
    parser.add_argument('--fvector-n', type=int, default=9, help='Largest arm for series against f-vectors')
    parser.add_argument('--quadrant-iso', type=int, default=8, help='Largest quadrant arm for isomorphism')
    parser.add_argument('--strip-iso', type=int, default=10, help='Largest strip arm for isomorphism')
    parser.add_argument('--random-pips', type=int, default=1000, help='Number of random PIPs to round-trip')
    parser.add_argument('--reroot-size', type=int, default=7, help='Largest PIP in the rerooting corpus')
    parser.add_argument('--reroot-corpus', type=int, default=60, help='Number of PIPs in the rerooting corpus')
    parser.add_argument('--metric-n', type=int, default=5, help='Largest arm for the metric oracles')
    parser.add_argument('--join-quadrant', type=int, default=5, help='Largest quadrant arm for join-irreducibles')
    parser.add_argument('--join-strip', type=int, default=6, help='Largest strip arm for join-irreducibles')
    parser.add_argument('--seed', type=int, default=7, help='Seed for random PIPs')
    parser.add_argument(
        '--log-level',
        type=str,
        default=os.getenv('LOG_LEVEL', 'INFO'),
        choices=list(LOG_LEVELS),
        help='Set the logging level'
    )
    return parser.parse_args()


def configure_logging(log_level):
    """Configure logging based on provided log level."""
    logging.basicConfig(
        level=getattr(logging, log_level.upper(), logging.INFO),
        format=LOG_FORMAT,
        handlers=[logging.StreamHandler()],
        force=True
    )


# -- random PIPs --------------------------------------------------------------

def random_pip(rng: np.random.Generator, max_elements: int, max_pairs: int = 3) -> Pip:
    """A random valid PIP with at most ``max_elements`` elements and ``max_pairs`` minimal inconsistent pairs."""
    while True:
        size = int(rng.integers(1, max_elements + 1))
        names = [f"p{i}" for i in range(size)]
        density = rng.uniform(0.1, 0.5)
        covers = [(names[i], names[j]) for i, j in combinations(range(size), 2) if rng.random() < density]
        candidates = list(combinations(names, 2))
        rng.shuffle(candidates)
        wanted = int(rng.integers(0, max_pairs + 1))
        pip = Pip.build(names, covers)
        chosen = []
        for a, b in candidates:
            if len(chosen) == wanted:
                break
            if pip.leq(a, b) or pip.leq(b, a):
                continue
            trial = Pip.build(names, covers, chosen + [(a, b)])
            if validate(trial):
                chosen.append((a, b))
        pip = Pip.build(names, covers, chosen).normalized()
        if validate(pip) and len(pip.minimal_inconsistent()) <= max_pairs:
            return pip


def pip_corpus(seed: int, count: int, max_elements: int) -> List[Pip]:
    rng = np.random.default_rng(seed)
    return [random_pip(rng, max_elements) for _ in range(count)]


# -- steps --------------------------------------------------------------------

def check_state_counts(args) -> bool:
    """Explored states: 2^n for the quadrant arm, F_{n+2} for the strip arm."""
    logger = logging.getLogger("checks.states")
    ok = True
    for kind, top in ((QUADRANT, args.quadrant_states), (STRIP, args.strip_states)):
        for n in range(1, top + 1):
            found = len(explore(robot_system(kind, n)))
            expected = state_count(n, kind)
            if found != expected:
                logger.error(f"{kind} n={n}: explored {found} states, expected {expected}")
                ok = False
        logger.info(f"{kind}: state counts checked up to n={top}")
    return ok


def check_generating_functions(args) -> bool:
    """Partial paths against series up to series-n, and against explored f-vectors up to fvector-n."""
    logger = logging.getLogger("checks.series")
    ok = True
    for kind in (QUADRANT, STRIP):
        for n in range(1, args.series_n + 1):
            enumerated = cube_counts(n, kind, METHOD_ENUMERATION, cap=None)
            expanded = series_counts(n, kind)
            if enumerated != expanded:
                logger.error(f"{kind} n={n}: paths {enumerated} vs series {expanded}")
                ok = False
        for n in range(1, args.fvector_n + 1):
            found = f_vector(state_complex(robot_system(kind, n)), n + 1)
            expected = series_counts(n, kind)
            if found != expected:
                logger.error(f"{kind} n={n}: f-vector {found} vs series {expected}")
                ok = False
        logger.info(f"{kind}: cube counts checked")
    return ok


def check_isomorphisms(args) -> bool:
    """The explored arm state complexes are rooted-isomorphic to X(QP_n) and X(SP_n)."""
    logger = logging.getLogger("checks.isomorphism")
    ok = True
    for kind, top, build in ((QUADRANT, args.quadrant_iso, qp_pip), (STRIP, args.strip_iso, sp_pip)):
        for n in tqdm(range(1, top + 1), desc=f"{kind} isomorphisms", unit="arm"):
            result = rooted_isomorphic(state_complex(robot_system(kind, n)), complex_from_pip(build(n)))
            if not result:
                logger.error(f"{kind} n={n}: not isomorphic ({result.reason})")
                ok = False
        logger.info(f"{kind}: isomorphisms checked up to n={top}")
    return ok


def check_pip_round_trip(args) -> bool:
    """reconstruct_pip(X(P)) is isomorphic to P for random PIPs."""
    logger = logging.getLogger("checks.round_trip")
    failures = 0
    for pip in tqdm(pip_corpus(args.seed, args.random_pips, 10), desc="PIP round trip", unit="pip"):
        rebuilt = reconstruct_pip(complex_from_pip(pip))
        if isinstance(rebuilt, NotCat0Report) or not pips_isomorphic(rebuilt, pip):
            failures += 1
            logger.error(f"round trip failed for {pip.to_dict()}")
    logger.info(f"{args.random_pips - failures}/{args.random_pips} PIPs round-tripped")
    return failures == 0


def check_rerooting(args) -> bool:
    """X(P_a) is (X(P), a) for every consistent ideal a, and rerooting twice gives P back."""
    logger = logging.getLogger("checks.reroot")
    ok = True
    corpus = pip_corpus(args.seed + 1, args.reroot_corpus, args.reroot_size)
    for pip in tqdm(corpus, desc="Rerooting", unit="pip"):
        base = complex_from_pip(pip)
        for ideal in consistent_ideals(pip):
            rerooted = reroot(pip, ideal)
            if not rooted_isomorphic(complex_from_pip(rerooted), base.rerooted(ideal)):
                logger.error(f"X(P_a) differs from (X(P), a) for a={pip.members(ideal)} in {pip.to_dict()}")
                ok = False
            if not pips_isomorphic(reroot(rerooted, ideal), pip):
                logger.error(f"double reroot at {pip.members(ideal)} changed {pip.to_dict()}")
                ok = False
    return ok


def _cube_move_distances(pip: Pip) -> dict:
    """Breadth-first distances in the graph joining any two vertices of a common cube."""
    complex_ = complex_from_pip(pip)
    graph = nx.Graph()
    graph.add_nodes_from(complex_.vertices)
    for cube in complex_.cubes:
        graph.add_edges_from(combinations(cube.verts, 2))
    return dict(nx.all_pairs_shortest_path_length(graph))


def check_metrics(args) -> bool:
    """Plan lengths for all ordered pairs against breadth-first oracles."""
    logger = logging.getLogger("checks.metrics")
    ok = True
    for kind, n in product((QUADRANT, STRIP), range(1, args.metric_n + 1)):
        planner = Planner.for_robot(kind, n)
        exploration = explore(planner.system)
        moves_distance = dict(nx.all_pairs_shortest_path_length(exploration.graph))
        vertex_of = {planner.encode_state(state): k for k, state in enumerate(exploration.states)}
        cube_distance = _cube_move_distances(planner.pip)
        for start, goal in product(exploration.states, repeat=2):
            a, b = planner.encode_state(start), planner.encode_state(goal)
            rerooted = reroot(planner.pip, a)
            target = a ^ b
            moves = planner.plan(start, goal, Metric.MOVES)
            steps = planner.plan(start, goal, Metric.STEPS)
            backwards = planner.plan(goal, start, Metric.STEPS)
            expected_moves = moves_distance[vertex_of[a]][vertex_of[b]]
            checks = {
                "moves = BFS distance": moves.length == expected_moves == bin(target).count("1"),
                "steps = cube-move distance": steps.length == cube_distance[a][b] == depth(rerooted, target),
                "time = steps": makespan(rerooted, target) == steps.length,
                "steps symmetric": backwards.length == steps.length,
            }
            if bin(target).count("1") <= 7:
                plans = list(planner.enumerate_move_plans(start, goal))
                shortest = sum(1 for _ in nx.all_shortest_paths(exploration.graph, vertex_of[a], vertex_of[b]))
                checks["plans = linear extensions"] = (
                    len(plans) == linear_extensions(rerooted, target) == shortest
                    and len({p.steps for p in plans}) == len(plans)
                )
            for name, passed in checks.items():
                if not passed:
                    logger.error(f"{kind} n={n} {start.encode()} -> {goal.encode()}: {name} fails")
                    ok = False
        logger.info(f"{kind} n={n}: {len(exploration) ** 2} ordered pairs planned and replayed")
    return ok


def check_negative_instances(args) -> bool:
    """Snakes whose state complexes are not CAT(0)."""
    logger = logging.getLogger("checks.snake")
    ok = True
    for length, rows, cols in ((1, 1, 6), (1, 3, 5)):
        complex_ = state_complex(snake_system(length, rows, cols))
        result = reconstruct(complex_)
        squares = empty_squares(complex_, limit=1)
        if isinstance(result, Reconstruction) or not squares:
            logger.error(f"snake {length} in {rows}x{cols}: expected a non-CAT(0) complex with an empty square")
            ok = False
        else:
            logger.info(f"snake {length} in {rows}x{cols}: {result.describe()}")
    return ok


def check_join_irreducibles(args) -> bool:
    """Join-irreducible arm states form QP_n and SP_n; the home order is the word order."""
    logger = logging.getLogger("checks.join_irreducibles")
    ok = True
    for kind, top in ((QUADRANT, args.join_quadrant), (STRIP, args.join_strip)):
        for n in range(1, top + 1):
            if not join_irreducibles_check(n, kind):
                logger.error(f"{kind} n={n}: join-irreducibles do not form the arm poset")
                ok = False
            if not word_order_agrees(n, kind):
                logger.error(f"{kind} n={n}: home order differs from the word order")
                ok = False
    return ok


STEPS: List[Tuple[str, Callable]] = [
    ('states', check_state_counts),
    ('series', check_generating_functions),
    ('isomorphism', check_isomorphisms),
    ('round-trip', check_pip_round_trip),
    ('reroot', check_rerooting),
    ('metrics', check_metrics),
    ('snake', check_negative_instances),
    ('join-irreducibles', check_join_irreducibles),
]
STEP_NAMES = [name for name, _ in STEPS]


def main():
    """Run every step that is not skipped."""
    args = parse_args()
    configure_logging(args.log_level)
    logger = logging.getLogger("checks")

    steps_completed = []
    steps_failed = []
    try:
        for number, (name, step) in enumerate(STEPS, start=1):
            if getattr(args, f"skip_{name.replace('-', '_')}"):
                logger.info(f"Skipping {name} (--skip-{name})")
                continue
            logger.info(f"Step {number}: {name}")
            started = time.perf_counter()
            try:
                passed = step(args)
            except Exception as e:
                logger.error(f"{name} failed with exception: {e}", exc_info=True)
                passed = False
            elapsed = time.perf_counter() - started
            if passed:
                steps_completed.append(name)
                logger.info(f"{name} passed in {elapsed:.1f}s")
            else:
                steps_failed.append(name)
                logger.error(f"{name} failed after {elapsed:.1f}s")
    except KeyboardInterrupt:
        logger.info("Checks interrupted by user")
        sys.exit(130)

    if steps_completed:
        logger.info(f"Passed steps: {', '.join(steps_completed)}")
    if steps_failed:
        logger.error(f"Failed steps: {', '.join(steps_failed)}")
        sys.exit(1)
    logger.info("All checks passed")


if __name__ == "__main__":
    main()
