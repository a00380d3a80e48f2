"""
Reachable-state exploration and state complex construction.
"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple, Union

import networkx as nx
from tqdm import tqdm

from ..complexes import Cube, CubeComplex
from ..core.exceptions import CapExceededError
from ..core.logger import PlannerLogger
from .system import ReconfigSystem, RState, apply


@dataclass(frozen=True)
class Exploration:
    """States reachable from the seed, numbered in BFS order, plus the transition graph."""

    system: ReconfigSystem
    states: Tuple[RState, ...]
    graph: nx.Graph = field(compare=False, repr=False)

    @cached_property
    def index(self) -> Dict[RState, int]:
        return {state: k for k, state in enumerate(self.states)}

    def __len__(self) -> int:
        return len(self.states)


class StateExplorer:
    """Breadth-first closure of a seed state under admissible generators."""

    def __init__(self, system: ReconfigSystem, cap: Optional[int] = None, progress: bool = False):
        """
        Args:
            system: The reconfigurable system
            cap: Maximum number of states
            progress: Show a progress bar
        """
        self.system = system
        self.cap = cap
        self.progress = progress
        self.logger = PlannerLogger.get_logger(self.__class__.__name__)

    def explore(self) -> Exploration:
        """
        Explore every state reachable from the seed.

        States are discovered layer by layer; each new layer is sorted by
        canonical encoding so numbering is stable across runs.

        Raises:
            CapExceededError: If more than ``cap`` states are reachable
        """
        system = self.system
        seed = system.validate_state(system.seed)
        index: Dict[RState, int] = {seed: 0}
        states: List[RState] = [seed]
        edges: List[Tuple[int, int, int]] = []
        layer = [seed]
        bar = tqdm(desc=f"Exploring {system.name}", unit="state", disable=not self.progress)
        bar.update(1)
        while layer:
            fresh: Set[RState] = set()
            pending: List[Tuple[int, int, RState]] = []
            for state in layer:
                source = index[state]
                for k, gen in enumerate(system.generators):
                    if gen.side(state) is None:
                        continue
                    target = apply(gen, state)
                    if not system.accepts(target):
                        continue
                    if target in index:
                        edges.append((source, index[target], k))
                    else:
                        fresh.add(target)
                        pending.append((source, k, target))
            layer = sorted(fresh, key=lambda s: s.labels)
            for state in layer:
                index[state] = len(states)
                states.append(state)
                if self.cap is not None and len(states) > self.cap:
                    bar.close()
                    raise CapExceededError(f"number of states of {system.name}", self.cap)
            bar.update(len(layer))
            edges.extend((source, index[target], k) for source, k, target in pending)
        bar.close()

        graph = nx.Graph()
        graph.add_nodes_from(range(len(states)))
        for source, target, k in edges:
            graph.add_edge(source, target, generator=k)
        self.logger.info(f"Explored {len(states)} states and {graph.number_of_edges()} transitions "
                         f"of {system.name}")
        return Exploration(system, tuple(states), graph)


def explore(system: ReconfigSystem, cap: Optional[int] = None, progress: bool = False) -> Exploration:
    return StateExplorer(system, cap, progress).explore()


def _commuting_sets(candidates: Sequence[int], commute_matrix) -> Iterator[Tuple[int, ...]]:
    """Every set of pairwise commuting generators drawn from ``candidates``, the empty set first."""

    def _grow(chosen: Tuple[int, ...], pool: Sequence[int]) -> Iterator[Tuple[int, ...]]:
        yield chosen
        for position, g in enumerate(pool):
            rest = [h for h in pool[position + 1:] if commute_matrix[g, h]]
            yield from _grow(chosen + (g,), rest)

    yield from _grow((), list(candidates))


def cube_corners(system: ReconfigSystem, state: RState, chosen: Sequence[int]) -> Optional[List[RState]]:
    """
    States reached from ``state`` by every subset of ``chosen``.

    Returns:
        The 2^k corner states, or None if some corner is rejected by the system
    """
    corners = [state]
    for g in chosen:
        gen = system.generators[g]
        extra = []
        for corner in corners:
            if gen.side(corner) is None:
                return None
            moved = apply(gen, corner)
            if not system.accepts(moved):
                return None
            extra.append(moved)
        corners.extend(extra)
    return corners


def state_complex(source: Union[ReconfigSystem, Exploration],
                  cap: Optional[int] = None,
                  max_dimension: Optional[int] = None,
                  progress: bool = False) -> CubeComplex:
    """
    Build the state complex: one k-cube per state and k pairwise commuting admissible moves.

    Vertices are state indices of the exploration; the root is the seed (index 0).

    Args:
        source: A system (explored here) or an existing exploration
        cap: Maximum number of states when exploring
        max_dimension: Maximum cube dimension
        progress: Show a progress bar

    Returns:
        The rooted state complex with deduplicated cubes
    """
    exploration = source if isinstance(source, Exploration) else explore(source, cap, progress)
    system = exploration.system
    index = exploration.index
    commute_matrix = system.commute_matrix
    seen: Set[frozenset] = set()
    cubes: List[Cube] = []
    for u, state in enumerate(tqdm(exploration.states, desc="Building cubes", unit="state",
                                   disable=not progress)):
        candidates = [k for k, gen in enumerate(system.generators)
                      if gen.side(state) is not None and apply(gen, state) in index]
        for chosen in _commuting_sets(candidates, commute_matrix):
            if max_dimension is not None and len(chosen) > max_dimension:
                raise CapExceededError("cube dimension", max_dimension)
            corners = cube_corners(system, state, chosen)
            if corners is None or any(corner not in index for corner in corners):
                continue
            verts = frozenset(index[corner] for corner in corners)
            if verts not in seen:
                seen.add(verts)
                cubes.append(Cube(verts))
    cubes.sort(key=lambda cube: (cube.dim, sorted(cube.verts)))
    return CubeComplex(tuple(range(len(exploration.states))), tuple(cubes), 0)
