"""
Finite posets with inconsistent pairs (PIPs).

A PIP is stored by its cover relations and its inconsistent pairs. Order
ideals are Python ints used as bitsets over the canonical element ordering,
so ``1 << pip.index[e]`` is the singleton ``{e}``.
"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from networkx.algorithms.isomorphism import DiGraphMatcher

from ..core.exceptions import PipError
from ..core.naming import canonical_sorted

Pair = Tuple[str, str]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of :func:`validate`; ``ok`` is False when an axiom fails."""

    ok: bool
    axiom: Optional[str] = None
    witness: Tuple[str, ...] = ()
    message: str = "ok"

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class Pip:
    """A finite poset together with a set of inconsistent pairs."""

    elements: Tuple[str, ...]
    covers: FrozenSet[Pair] = field(default_factory=frozenset)
    inconsistent: FrozenSet[Pair] = field(default_factory=frozenset)

    @classmethod
    def build(cls,
              elements: Iterable,
              covers: Iterable[Sequence] = (),
              inconsistent: Iterable[Sequence] = ()) -> 'Pip':
        """
        Build a PIP from raw identifiers.

        Args:
            elements: Element identifiers (converted to strings)
            covers: Pairs (a, b) meaning a is below b
            inconsistent: Unordered pairs that cannot coexist

        Returns:
            The PIP with canonically ordered elements

        Raises:
            PipError: If a relation names an unknown element
        """
        ids = canonical_sorted({str(e) for e in elements})
        known = set(ids)
        position = {e: i for i, e in enumerate(ids)}

        def _pair(raw: Sequence, what: str) -> Pair:
            if len(raw) != 2:
                raise PipError(f"{what} {list(raw)!r} is not a pair")
            a, b = str(raw[0]), str(raw[1])
            for e in (a, b):
                if e not in known:
                    raise PipError(f"{what} {list(raw)!r} names unknown element '{e}'")
            return a, b

        cover_pairs = frozenset(_pair(raw, "cover") for raw in covers)
        bad_pairs = set()
        for raw in inconsistent:
            a, b = _pair(raw, "inconsistent pair")
            bad_pairs.add((a, b) if position[a] <= position[b] else (b, a))
        return cls(tuple(ids), cover_pairs, frozenset(bad_pairs))

    # -- indexing -------------------------------------------------------

    @cached_property
    def index(self) -> Dict[str, int]:
        return {e: i for i, e in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.elements)) - 1

    def bit(self, element: str) -> int:
        try:
            return 1 << self.index[element]
        except KeyError:
            raise PipError(f"unknown element '{element}'") from None

    def mask_of(self, members: Iterable[str]) -> int:
        """Bitset of a collection of element identifiers."""
        mask = 0
        for e in members:
            mask |= self.bit(str(e))
        return mask

    def members(self, mask: int) -> Tuple[str, ...]:
        """Element identifiers of a bitset, in canonical order."""
        return tuple(self.elements[i] for i in iter_bits(mask))

    def sort_pairs(self, pairs: Iterable[Pair]) -> List[Pair]:
        return sorted(pairs, key=lambda pair: (self.index[pair[0]], self.index[pair[1]]))

    # -- order ----------------------------------------------------------

    @cached_property
    def graph(self) -> nx.DiGraph:
        """Cover graph with an edge a -> b for every cover a < b."""
        graph = nx.DiGraph()
        graph.add_nodes_from(self.elements)
        graph.add_edges_from(self.covers)
        return graph

    def is_acyclic(self) -> bool:
        return nx.is_directed_acyclic_graph(self.graph)

    @cached_property
    def topological_order(self) -> Tuple[str, ...]:
        """A linear extension of the whole poset, lexicographic on ties."""
        if not self.is_acyclic():
            raise PipError("cover relations contain a cycle")
        return tuple(nx.lexicographical_topological_sort(self.graph, key=self.index.__getitem__))

    @cached_property
    def down_masks(self) -> Tuple[int, ...]:
        """``down_masks[i]`` is the principal ideal of element i (itself included)."""
        masks = [0] * len(self.elements)
        for e in self.topological_order:
            i = self.index[e]
            mask = 1 << i
            for pred in self.graph.predecessors(e):
                mask |= masks[self.index[pred]]
            masks[i] = mask
        return tuple(masks)

    @cached_property
    def up_masks(self) -> Tuple[int, ...]:
        """``up_masks[i]`` is the principal filter of element i (itself included)."""
        masks = [0] * len(self.elements)
        for e in reversed(self.topological_order):
            i = self.index[e]
            mask = 1 << i
            for succ in self.graph.successors(e):
                mask |= masks[self.index[succ]]
            masks[i] = mask
        return tuple(masks)

    @cached_property
    def order_matrix(self) -> np.ndarray:
        """Boolean matrix ``M[i, j]`` true iff element i <= element j."""
        size = len(self.elements)
        matrix = np.zeros((size, size), dtype=bool)
        for j, mask in enumerate(self.down_masks):
            for i in iter_bits(mask):
                matrix[i, j] = True
        return matrix

    def leq(self, a: str, b: str) -> bool:
        return bool(self.down_masks[self.index[b]] >> self.index[a] & 1)

    def below(self, element: str) -> int:
        """Strict down-set of an element as a bitset."""
        i = self.index[element]
        return self.down_masks[i] & ~(1 << i)

    def maximal(self, mask: int) -> int:
        """Maximal elements of a bitset."""
        up = self.up_masks
        return sum(1 << i for i in iter_bits(mask) if up[i] & mask == 1 << i)

    def minimal(self, mask: int) -> int:
        """Minimal elements of a bitset."""
        down = self.down_masks
        return sum(1 << i for i in iter_bits(mask) if down[i] & mask == 1 << i)

    def down_closure(self, mask: int) -> int:
        closure = 0
        for i in iter_bits(mask):
            closure |= self.down_masks[i]
        return closure

    def is_antichain(self, mask: int) -> bool:
        return self.maximal(mask) == mask

    # -- inconsistency --------------------------------------------------

    @cached_property
    def conflict_masks(self) -> Tuple[int, ...]:
        """``conflict_masks[i]``: every element inconsistent with i, after upward closure."""
        masks = [0] * len(self.elements)
        up = self.up_masks
        for a, b in self.inconsistent:
            ia, ib = self.index[a], self.index[b]
            for i in iter_bits(up[ia]):
                masks[i] |= up[ib]
            for i in iter_bits(up[ib]):
                masks[i] |= up[ia]
        return tuple(masks)

    def is_inconsistent(self, a: str, b: str) -> bool:
        return bool(self.conflict_masks[self.index[a]] >> self.index[b] & 1)

    def closed_inconsistent(self) -> FrozenSet[Pair]:
        """All inconsistent pairs, closed upward."""
        pairs = set()
        for i, mask in enumerate(self.conflict_masks):
            for j in iter_bits(mask):
                if i < j:
                    pairs.add((self.elements[i], self.elements[j]))
        return frozenset(pairs)

    def minimal_inconsistent(self) -> FrozenSet[Pair]:
        """Inconsistent pairs not implied by a pair lying below them."""
        conflict = self.conflict_masks
        pairs = set()
        for i, mask in enumerate(conflict):
            below_i = self.down_masks[i] & ~(1 << i)
            for j in iter_bits(mask):
                if j <= i:
                    continue
                below_j = self.down_masks[j] & ~(1 << j)
                if below_i & conflict[j] == 0 and below_j & conflict[i] == 0:
                    pairs.add((self.elements[i], self.elements[j]))
        return frozenset(pairs)

    # -- normal form ----------------------------------------------------

    def hasse_covers(self) -> FrozenSet[Pair]:
        """Cover relations of the transitive reduction."""
        reduction = nx.transitive_reduction(self.graph)
        return frozenset((a, b) for a, b in reduction.edges())

    def normalized(self) -> 'Pip':
        """Same PIP with covers reduced and only minimal inconsistent pairs kept."""
        return Pip(self.elements, self.hasse_covers(), self.minimal_inconsistent())

    def relabel(self, mapping: Dict[str, str]) -> 'Pip':
        return Pip.build(
            (mapping[e] for e in self.elements),
            ((mapping[a], mapping[b]) for a, b in self.covers),
            ((mapping[a], mapping[b]) for a, b in self.inconsistent),
        )

    def to_dict(self) -> Dict[str, List]:
        """JSON form with reduced covers and minimal pairs, canonically sorted."""
        normal = self.normalized()
        return {
            "elements": list(normal.elements),
            "covers": [list(pair) for pair in normal.sort_pairs(normal.covers)],
            "inconsistent": [list(pair) for pair in normal.sort_pairs(normal.inconsistent)],
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'Pip':
        if not isinstance(data, dict) or "elements" not in data:
            raise PipError("PIP description must be an object with an 'elements' list")
        return cls.build(data["elements"], data.get("covers", []), data.get("inconsistent", []))


def validate(pip: Pip, closed: bool = False) -> ValidationReport:
    """
    Check the order is acyclic and both PIP axioms hold.

    With ``closed=False`` the listed inconsistent pairs are taken as
    generators and their upward closure is what gets checked. With
    ``closed=True`` the listed set itself must already be upward closed.

    Args:
        pip: The PIP to check
        closed: Require the listed inconsistent pairs to be upward closed

    Returns:
        A report naming the first violated axiom and its witness elements
    """
    if not pip.is_acyclic():
        cycle = nx.find_cycle(pip.graph)
        witness = tuple(edge[0] for edge in cycle)
        return ValidationReport(False, "order", witness,
                                f"cover relations contain a cycle through {', '.join(witness)}")

    for a, b in pip.sort_pairs(pip.inconsistent):
        if a == b:
            return ValidationReport(False, "irreflexive", (a,),
                                    f"element '{a}' is listed as inconsistent with itself")

    up = pip.up_masks
    for a, b in pip.sort_pairs(pip.inconsistent):
        common = up[pip.index[a]] & up[pip.index[b]]
        if common:
            r = pip.members(common & -common)[0]
            return ValidationReport(False, "axiom 1", (a, b, r),
                                    f"inconsistent pair {{{a}, {b}}} has common upper bound '{r}'")

    if closed:
        listed = pip.inconsistent
        for a, b in pip.sort_pairs(listed):
            for lower, other in ((a, b), (b, a)):
                for upper in canonical_sorted(pip.graph.successors(lower)):
                    pair = tuple(sorted((upper, other), key=pip.index.__getitem__))
                    if pair not in listed:
                        return ValidationReport(
                            False, "axiom 2", (a, b, upper, other),
                            f"{{{a}, {b}}} is inconsistent but {{{upper}, {other}}} is not listed",
                        )

    return ValidationReport(True)


def _comparison_graph(pip: Pip) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(pip.elements)
    for a, b in pip.hasse_covers():
        graph.add_edge(a, b, kind="cover")
    for a, b in pip.minimal_inconsistent():
        graph.add_edge(a, b, kind="inconsistent")
        graph.add_edge(b, a, kind="inconsistent")
    return graph


def pip_isomorphism(first: Pip, second: Pip) -> Optional[Dict[str, str]]:
    """
    Find a bijection preserving order and inconsistency.

    Returns:
        Mapping from elements of ``first`` to elements of ``second``, or None
    """
    if len(first) != len(second):
        return None
    g1, g2 = _comparison_graph(first), _comparison_graph(second)
    if g1.number_of_edges() != g2.number_of_edges():
        return None
    matcher = DiGraphMatcher(g1, g2, edge_match=lambda x, y: x["kind"] == y["kind"])
    for mapping in matcher.isomorphisms_iter():
        return dict(mapping)
    return None


def pips_isomorphic(first: Pip, second: Pip) -> bool:
    return pip_isomorphism(first, second) is not None
