"""
Rooted isomorphism of cube complexes.

The 1-skeletons are matched with the VF2 backtracking matcher; vertices
only pair up when they agree on being the root and on how many cubes of
each dimension contain them. A skeleton isomorphism is accepted once it
also carries every cube onto a cube.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Optional

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from .cube_complex import CubeComplex, Vertex, f_vector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IsomorphismResult:
    isomorphic: bool
    mapping: Optional[Dict[Vertex, Vertex]] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.isomorphic


def _vertex_profiles(complex_: CubeComplex) -> Dict[Vertex, tuple]:
    counts: Dict[Vertex, Counter] = {v: Counter() for v in complex_.vertices}
    for cube in complex_.cubes:
        for v in cube.verts:
            counts[v][cube.dim] += 1
    top = complex_.dimension
    return {
        v: (v == complex_.root,) + tuple(counts[v][d] for d in range(top + 1))
        for v in complex_.vertices
    }


def _labelled_skeleton(complex_: CubeComplex) -> nx.Graph:
    graph = complex_.skeleton.copy()
    nx.set_node_attributes(graph, _vertex_profiles(complex_), "profile")
    return graph


def rooted_isomorphic(first: CubeComplex, second: CubeComplex) -> IsomorphismResult:
    """
    Decide whether two rooted complexes are isomorphic.

    Args:
        first: First complex
        second: Second complex

    Returns:
        Result with a root-preserving vertex map when isomorphic
    """
    if len(first.vertices) != len(second.vertices):
        return IsomorphismResult(False, reason="vertex counts differ")
    if f_vector(first) != f_vector(second):
        return IsomorphismResult(False, reason=f"f-vectors differ: {f_vector(first)} vs {f_vector(second)}")

    g1, g2 = _labelled_skeleton(first), _labelled_skeleton(second)
    if sorted(map(repr, nx.get_node_attributes(g1, "profile").values())) != \
            sorted(map(repr, nx.get_node_attributes(g2, "profile").values())):
        return IsomorphismResult(False, reason="vertex cube profiles differ")

    higher = [cube.verts for cube in first.cubes if cube.dim >= 2]
    target = second.cube_sets
    matcher = GraphMatcher(g1, g2, node_match=lambda a, b: a["profile"] == b["profile"])
    tried = 0
    for mapping in matcher.isomorphisms_iter():
        tried += 1
        if all(frozenset(mapping[v] for v in verts) in target for verts in higher):
            logger.debug(f"Found rooted isomorphism after {tried} skeleton matches")
            return IsomorphismResult(True, dict(mapping))
    return IsomorphismResult(False, reason=f"none of {tried} skeleton isomorphisms preserves the cubes")
