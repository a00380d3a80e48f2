"""
Explicit rooted cubical complexes and the cube complex X(P) of a PIP.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Any, Callable, Dict, FrozenSet, Hashable, Iterator, List, Optional, Tuple

import networkx as nx

from ..core.exceptions import CapExceededError, ValidationError
from ..core.naming import natural_key
from ..pips import Pip, consistent_ideals

logger = logging.getLogger(__name__)

Vertex = Hashable


def vertex_key(vertex: Vertex) -> Tuple:
    return natural_key(str(vertex))


def submasks(mask: int) -> Iterator[int]:
    """Every submask of ``mask``, from ``mask`` down to 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True)
class Cube:
    """A cube given by its vertex set; PIP-born cubes also keep their (I, M) label."""

    verts: FrozenSet[Vertex]
    label: Optional[Tuple[int, int]] = None

    @property
    def dim(self) -> int:
        return len(self.verts).bit_length() - 1

    def sorted_verts(self) -> List[Vertex]:
        return sorted(self.verts, key=vertex_key)


@dataclass(frozen=True)
class CubeComplex:
    """
    A rooted cubical complex.

    ``cubes`` holds every cube including the 0-cubes, so faces are
    explicit. Vertex identifiers are arbitrary hashables (ideal bitsets
    for complexes built from a PIP, state indices for state complexes).
    """

    vertices: Tuple[Vertex, ...]
    cubes: Tuple[Cube, ...]
    root: Vertex

    def __post_init__(self):
        if self.root not in self.vertex_set:
            raise ValidationError(f"root {self.root!r} is not a vertex of the complex")

    @cached_property
    def vertex_set(self) -> FrozenSet[Vertex]:
        return frozenset(self.vertices)

    @cached_property
    def cube_sets(self) -> FrozenSet[FrozenSet[Vertex]]:
        return frozenset(cube.verts for cube in self.cubes)

    def cubes_of_dim(self, dim: int) -> List[Cube]:
        return [cube for cube in self.cubes if cube.dim == dim]

    @cached_property
    def edges(self) -> Tuple[Tuple[Vertex, Vertex], ...]:
        pairs = [tuple(cube.sorted_verts()) for cube in self.cubes if len(cube.verts) == 2]
        return tuple(sorted(pairs, key=lambda pair: (vertex_key(pair[0]), vertex_key(pair[1]))))

    @cached_property
    def skeleton(self) -> nx.Graph:
        """The 1-skeleton as an undirected graph."""
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)
        return graph

    @property
    def dimension(self) -> int:
        return max((cube.dim for cube in self.cubes), default=0)

    def is_connected(self) -> bool:
        return nx.is_connected(self.skeleton) if self.vertices else False

    def rerooted(self, root: Vertex) -> 'CubeComplex':
        return CubeComplex(self.vertices, self.cubes, root)

    def relabel(self, mapping: Callable[[Vertex], Vertex]) -> 'CubeComplex':
        """Rename vertices through ``mapping``; labels are dropped."""
        return CubeComplex(
            tuple(mapping(v) for v in self.vertices),
            tuple(Cube(frozenset(mapping(v) for v in cube.verts)) for cube in self.cubes),
            mapping(self.root),
        )

    def normalized(self) -> 'CubeComplex':
        """Vertex-set form: labels dropped, vertices and cubes canonically sorted."""
        vertices = tuple(sorted(self.vertices, key=vertex_key))
        cubes = sorted(
            {Cube(cube.verts) for cube in self.cubes},
            key=lambda cube: (cube.dim, [vertex_key(v) for v in cube.sorted_verts()]),
        )
        return CubeComplex(vertices, tuple(cubes), self.root)

    def check_structure(self) -> List[str]:
        """
        Problems that stop this from being a cubical complex.

        Checks vertex counts are powers of two, every cube vertex is a
        vertex, every vertex is a 0-cube, and each k-cube carries exactly
        k edges at each of its corners.
        """
        problems = []
        vertex_set = self.vertex_set
        zero_cubes = {next(iter(cube.verts)) for cube in self.cubes if cube.dim == 0}
        missing = [v for v in self.vertices if v not in zero_cubes]
        if missing:
            problems.append(f"vertex {missing[0]!r} has no 0-cube")
        graph = self.skeleton
        for cube in self.cubes:
            size = len(cube.verts)
            if size == 0 or size & (size - 1):
                problems.append(f"cube {cube.sorted_verts()} has {size} vertices")
                continue
            if not cube.verts <= vertex_set:
                problems.append(f"cube {cube.sorted_verts()} uses unknown vertices")
                continue
            for v in cube.verts:
                degree = sum(1 for u in graph.neighbors(v) if u in cube.verts)
                if degree != cube.dim:
                    problems.append(f"vertex {v!r} has {degree} edges inside the {cube.dim}-cube "
                                    f"{cube.sorted_verts()}")
                    break
        return problems

    def to_dict(self) -> Dict[str, Any]:
        normal = self.normalized()
        return {
            "vertices": list(normal.vertices),
            "cubes": [{"verts": cube.sorted_verts()} for cube in normal.cubes if cube.dim >= 1],
            "root": normal.root,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'CubeComplex':
        """
        Read the JSON form; 0-cubes are implied by the vertex list.

        Raises:
            ValidationError: If the description is malformed or not a cubical complex
        """
        if not isinstance(data, dict) or "vertices" not in data or "root" not in data:
            raise ValidationError("complex description needs 'vertices', 'cubes' and 'root'")
        try:
            vertices = tuple(data["vertices"])
            cubes = [Cube(frozenset([v])) for v in vertices]
            for entry in data.get("cubes", []):
                verts = entry.get("verts") if isinstance(entry, dict) else entry
                if not isinstance(verts, list) or not verts:
                    raise ValidationError(f"cube entry {entry!r} needs a non-empty vertex list")
                cubes.append(Cube(frozenset(verts)))
            unique = {cube.verts: cube for cube in cubes}
            complex_ = cls(vertices, tuple(unique.values()), data["root"])
        except TypeError as e:
            raise ValidationError(f"malformed complex description: {e}") from e
        problems = complex_.check_structure()
        if problems:
            raise ValidationError(f"not a cubical complex: {problems[0]}")
        return complex_


def complex_from_pip(pip: Pip, cap: Optional[int] = None, max_dimension: Optional[int] = None) -> CubeComplex:
    """
    Build the rooted cube complex X(P).

    Vertices are the consistent ideals (as bitsets); for each ideal I and
    each set M of maximal elements of I there is a cube C(I, M) on the
    ideals I - S with S inside M. The root is the empty ideal.

    Args:
        pip: A validated PIP
        cap: Maximum number of ideals
        max_dimension: Maximum cube dimension

    Returns:
        The complex, cubes labelled by (I, M)
    """
    ideals = consistent_ideals(pip, cap)
    cubes: List[Cube] = []
    for ideal in ideals:
        tops = pip.maximal(ideal)
        if max_dimension is not None and bin(tops).count("1") > max_dimension:
            raise CapExceededError("cube dimension", max_dimension)
        for chosen in submasks(tops):
            verts = frozenset(ideal & ~dropped for dropped in submasks(chosen))
            cubes.append(Cube(verts, (ideal, chosen)))
    cubes.sort(key=lambda cube: (cube.dim, cube.label))
    logger.debug(f"Built X(P) with {len(ideals)} vertices and {len(cubes)} cubes")
    return CubeComplex(tuple(ideals), tuple(cubes), 0)


def f_vector(complex_: CubeComplex, length: Optional[int] = None) -> Tuple[int, ...]:
    """
    Number of cubes in each dimension.

    Args:
        complex_: The complex
        length: Pad with zeros to at least this many entries

    Returns:
        Counts indexed by dimension
    """
    counts: Dict[int, int] = {}
    for cube in complex_.cubes:
        counts[cube.dim] = counts.get(cube.dim, 0) + 1
    size = max(counts, default=-1) + 1
    if length is not None:
        size = max(size, length)
    return tuple(counts.get(d, 0) for d in range(size))


def empty_squares(complex_: CubeComplex, limit: Optional[int] = None) -> List[Tuple[Vertex, ...]]:
    """
    Edge 4-cycles of the 1-skeleton that bound no 2-cube.

    Returns:
        Each cycle as a tuple of its four vertices in cyclic order
    """
    graph = complex_.skeleton
    squares = {cube.verts for cube in complex_.cubes if cube.dim == 2}
    found: Dict[FrozenSet[Vertex], Tuple[Vertex, ...]] = {}
    for v in sorted(graph.nodes, key=vertex_key):
        neighbours = sorted(graph.neighbors(v), key=vertex_key)
        for a, b in combinations(neighbours, 2):
            common = set(graph.neighbors(a)) & set(graph.neighbors(b))
            for w in sorted(common - {v}, key=vertex_key):
                cycle = frozenset((v, a, w, b))
                if len(cycle) == 4 and cycle not in squares and cycle not in found:
                    found[cycle] = (v, a, w, b)
                    if limit is not None and len(found) >= limit:
                        return list(found.values())
    return list(found.values())
