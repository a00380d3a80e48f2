"""
The partial order on states induced by shortest edge-paths from a home state.
"""
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Callable, List, Optional, Sequence, Union

import networkx as nx
import numpy as np

from ..core.exceptions import StateError
from ..pips import Pip
from .explorer import Exploration, explore
from .system import ReconfigSystem, RState


@dataclass(frozen=True)
class StateOrder:
    """
    States ordered by p <= q iff d(home, p) + d(p, q) = d(home, q).

    ``distances`` is the all-pairs edge distance matrix of the
    transition graph; ``matrix[p, q]`` holds p <= q.
    """

    states: tuple
    home: int
    distances: np.ndarray = field(compare=False, repr=False)
    matrix: np.ndarray = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.states)

    def leq(self, p: int, q: int) -> bool:
        return bool(self.matrix[p, q])

    def join(self, p: int, q: int) -> Optional[int]:
        """Least upper bound of p and q, or None."""
        bounds = np.flatnonzero(self.matrix[p] & self.matrix[q])
        for u in bounds:
            if self.matrix[u, bounds].all():
                return int(u)
        return None

    def meet(self, p: int, q: int) -> Optional[int]:
        """Greatest lower bound of p and q, or None."""
        bounds = np.flatnonzero(self.matrix[:, p] & self.matrix[:, q])
        for u in bounds:
            if self.matrix[bounds, u].all():
                return int(u)
        return None

    def is_lattice(self) -> bool:
        size = len(self)
        return all(self.join(p, q) is not None and self.meet(p, q) is not None
                   for p in range(size) for q in range(p + 1, size))

    def is_distributive(self) -> bool:
        """Check a ^ (b v c) = (a ^ b) v (a ^ c) for every triple."""
        if not self.is_lattice():
            return False
        size = len(self)
        joins = np.array([[self.join(p, q) for q in range(size)] for p in range(size)])
        meets = np.array([[self.meet(p, q) for q in range(size)] for p in range(size)])
        for a, b, c in product(range(size), repeat=3):
            if meets[a, joins[b, c]] != joins[meets[a, b], meets[a, c]]:
                return False
        return True

    @cached_property
    def cover_matrix(self) -> np.ndarray:
        """``C[p, q]`` true iff q covers p."""
        strict = self.matrix & ~np.eye(len(self), dtype=bool)
        between = (strict.astype(np.int64) @ strict.astype(np.int64)) > 0
        return strict & ~between

    def join_irreducibles(self) -> List[int]:
        """States covering exactly one state."""
        lower_covers = self.cover_matrix.sum(axis=0)
        return [int(q) for q in np.flatnonzero(lower_covers == 1)]

    def induced_pip(self, members: Sequence[int], name: Callable[[int], str] = str) -> Pip:
        """The order restricted to ``members`` as a PIP without inconsistent pairs."""
        covers = [(name(p), name(q)) for p in members for q in members
                  if p != q and self.matrix[p, q]]
        return Pip.build((name(p) for p in members), covers).normalized()


def home_order(source: Union[ReconfigSystem, Exploration], home: Optional[RState] = None) -> StateOrder:
    """
    Order the states of a system by shortest paths from ``home``.

    Args:
        source: A system (explored here) or an exploration
        home: The home state (defaults to the seed)

    Returns:
        The state order

    Raises:
        StateError: If ``home`` is not reachable
    """
    exploration = source if isinstance(source, Exploration) else explore(source)
    home_state = exploration.system.seed if home is None else home
    if home_state not in exploration.index:
        raise StateError(f"home state {home_state.encode()} is not reachable")
    h = exploration.index[home_state]

    size = len(exploration)
    distances = np.full((size, size), -1, dtype=np.int64)
    for source_index, lengths in nx.all_pairs_shortest_path_length(exploration.graph):
        for target_index, length in lengths.items():
            distances[source_index, target_index] = length
    from_home = distances[h]
    matrix = (from_home[:, None] + distances) == from_home[None, :]
    return StateOrder(exploration.states, h, distances, matrix)
