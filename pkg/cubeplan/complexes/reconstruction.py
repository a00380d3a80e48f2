"""
Recover the PIP of a rooted cube complex, or explain why there is none.

Edges are grouped into hyperplanes by gluing opposite edges of every
square. Each vertex is labelled with the hyperplanes crossed on the way
from the root; the labels define the order and inconsistency relations,
and the complex is CAT(0) exactly when rebuilding X(P) from the result
gives back the same complex under this labelling.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Tuple, Union

import networkx as nx
from networkx.utils import UnionFind

from ..core.exceptions import ValidationError
from ..pips import Pip, validate
from .cube_complex import CubeComplex, Vertex, complex_from_pip, empty_squares, vertex_key

logger = logging.getLogger(__name__)

Edge = FrozenSet[Vertex]


@dataclass(frozen=True)
class NotCat0Report:
    """Why a rooted complex has no PIP."""

    reason: str
    witness: Tuple = ()
    empty_squares: Tuple[Tuple, ...] = ()

    def describe(self) -> str:
        text = f"not CAT(0): {self.reason}"
        if self.witness:
            text += f" (witness: {', '.join(map(str, self.witness))})"
        if self.empty_squares:
            text += f"; {len(self.empty_squares)} empty square(s), e.g. {list(self.empty_squares[0])}"
        return text

    def to_dict(self) -> Dict:
        return {
            "cat0": False,
            "reason": self.reason,
            "witness": [str(w) for w in self.witness],
            "empty_squares": [[str(v) for v in cycle] for cycle in self.empty_squares],
        }


@dataclass(frozen=True)
class Reconstruction:
    """A PIP together with the vertex labelling that realizes the complex as X(P)."""

    pip: Pip
    vertex_ideals: Dict[Vertex, int] = field(hash=False)
    hyperplanes: Tuple[Tuple[Edge, ...], ...] = field(hash=False)

    @cached_property
    def ideal_vertices(self) -> Dict[int, Vertex]:
        return {ideal: v for v, ideal in self.vertex_ideals.items()}


def _edge_sort_key(edge: Edge) -> Tuple:
    return tuple(sorted(vertex_key(v) for v in edge))


def hyperplanes(complex_: CubeComplex) -> List[Tuple[Edge, ...]]:
    """
    Partition the edges into hyperplanes.

    Two edges share a hyperplane when a chain of squares links them
    through opposite sides.

    Returns:
        Edge classes ordered by their canonically first edge

    Raises:
        ValidationError: If a square is not bounded by a 4-cycle of edges
    """
    edge_set = {frozenset(pair) for pair in complex_.edges}
    classes = UnionFind(edge_set)
    for cube in complex_.cubes:
        if cube.dim != 2:
            continue
        sides = [frozenset(pair) for pair in combinations(cube.verts, 2) if frozenset(pair) in edge_set]
        if len(sides) != 4:
            raise ValidationError(f"square {cube.sorted_verts()} is bounded by {len(sides)} edges")
        for a, b in combinations(sides, 2):
            if not a & b:
                classes.union(a, b)
    groups = [tuple(sorted(group, key=_edge_sort_key)) for group in classes.to_sets()]
    groups.sort(key=lambda group: _edge_sort_key(group[0]))
    return groups


def reconstruct(complex_: CubeComplex,
                root: Optional[Vertex] = None,
                cap: Optional[int] = None) -> Union[Reconstruction, NotCat0Report]:
    """
    Compute the PIP of a rooted complex together with the vertex labels.

    Args:
        complex_: A connected cubical complex
        root: Base vertex (defaults to the complex's root)
        cap: Maximum number of ideals while rebuilding X(P)

    Returns:
        A Reconstruction, or a NotCat0Report naming the first failure

    Raises:
        ValidationError: If the root is unknown or the complex is disconnected
    """
    root = complex_.root if root is None else root
    if root not in complex_.vertex_set:
        raise ValidationError(f"root {root!r} is not a vertex of the complex")
    if not complex_.is_connected():
        raise ValidationError("complex is disconnected")

    def _report(reason: str, witness: Tuple = ()) -> NotCat0Report:
        squares = tuple(empty_squares(complex_, limit=5))
        logger.info(f"Complex is not CAT(0): {reason}")
        return NotCat0Report(reason, witness, squares)

    problems = complex_.check_structure()
    if problems:
        return _report(f"not a cubical complex: {problems[0]}")

    try:
        planes = hyperplanes(complex_)
    except ValidationError as e:
        return _report(str(e))
    plane_of: Dict[Edge, int] = {}
    for k, group in enumerate(planes):
        for edge in group:
            plane_of[edge] = k

    graph = complex_.skeleton
    distance = nx.single_source_shortest_path_length(graph, root)
    labels: Dict[Vertex, int] = {root: 0}
    for v in sorted(graph.nodes, key=lambda u: (distance[u], vertex_key(u))):
        if v == root:
            continue
        parent = min((u for u in graph.neighbors(v) if distance[u] == distance[v] - 1), key=vertex_key)
        crossing = 1 << plane_of[frozenset((parent, v))]
        if labels[parent] & crossing:
            return _report("a geodesic from the root crosses the same hyperplane twice", (parent, v))
        labels[v] = labels[parent] | crossing

    for u, v in complex_.edges:
        if distance[u] == distance[v]:
            return _report("an edge joins two vertices at the same distance from the root", (u, v))
        near, far = (u, v) if distance[u] < distance[v] else (v, u)
        crossing = 1 << plane_of[frozenset((u, v))]
        if labels[far] != labels[near] | crossing or labels[near] & crossing:
            return _report("hyperplane labels disagree along an edge", (near, far))

    if len(set(labels.values())) != len(labels):
        seen: Dict[int, Vertex] = {}
        for v in sorted(labels, key=vertex_key):
            if labels[v] in seen:
                return _report("two vertices are separated from the root by the same hyperplanes",
                               (seen[labels[v]], v))
            seen[labels[v]] = v

    count = len(planes)
    names = [f"h{k}" for k in range(count)]
    below = [(1 << count) - 1] * count
    together = [0] * count
    for label in labels.values():
        bits = label
        while bits:
            low = bits & -bits
            k = low.bit_length() - 1
            below[k] &= label
            together[k] |= label
            bits ^= low
    covers = [(names[p], names[q]) for q in range(count) for p in range(count)
              if p != q and below[q] >> p & 1]
    inconsistent = [(names[p], names[q]) for p in range(count) for q in range(p + 1, count)
                    if not together[p] >> q & 1]
    pip = Pip.build(names, covers, inconsistent)
    report = validate(pip)
    if not report:
        return _report(f"hyperplane relations do not form a PIP: {report.message}", report.witness)
    pip = pip.normalized()

    rebuilt = complex_from_pip(pip, cap)
    expected = set(rebuilt.vertices)
    found = set(labels.values())
    if expected != found:
        extra = sorted(expected - found)
        if extra:
            return _report("the hyperplane PIP has a consistent ideal with no vertex",
                           tuple(pip.members(extra[0])))
        return _report("a vertex label is not a consistent ideal of the hyperplane PIP")

    image = {frozenset(labels[v] for v in cube.verts) for cube in complex_.cubes}
    for cube in rebuilt.cubes:
        if cube.verts not in image:
            corner = cube.label[0] if cube.label else min(cube.verts)
            members = [f"{{{', '.join(pip.members(m))}}}" for m in sorted(cube.verts)]
            return _report(f"a {cube.dim}-cube of X(P) is missing from the complex at ideal "
                           f"{{{', '.join(pip.members(corner))}}}", tuple(members))
    if len(image) != len(rebuilt.cubes):
        return _report("the complex has cubes that X(P) does not")

    return Reconstruction(pip, labels, tuple(planes))


def reconstruct_pip(complex_: CubeComplex,
                    root: Optional[Vertex] = None,
                    cap: Optional[int] = None) -> Union[Pip, NotCat0Report]:
    """
    The PIP of a rooted complex, or a report when the complex is not CAT(0).
    """
    result = reconstruct(complex_, root, cap)
    return result.pip if isinstance(result, Reconstruction) else result


def is_cat0(complex_: CubeComplex, root: Optional[Vertex] = None) -> bool:
    return isinstance(reconstruct(complex_, root), Reconstruction)
