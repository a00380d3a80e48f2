"""
Reconfigurable systems: labelled base graphs moved by local reversible generators.
"""
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from ..core.exceptions import StateError, ValidationError
from ..core.naming import canonical_sorted, natural_key

Labels = Tuple[Tuple[str, str], ...]


def _sorted_labels(mapping: Mapping[str, str]) -> Labels:
    return tuple(sorted(((str(v), str(s)) for v, s in mapping.items()), key=lambda item: natural_key(item[0])))


@dataclass(frozen=True)
class RState:
    """A labelling of the base-graph vertices, stored as sorted (vertex, symbol) pairs."""

    labels: Labels

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, str]) -> 'RState':
        return cls(_sorted_labels(mapping))

    @cached_property
    def as_dict(self) -> Dict[str, str]:
        return dict(self.labels)

    def get(self, vertex: str) -> str:
        try:
            return self.as_dict[vertex]
        except KeyError:
            raise StateError(f"state has no label for vertex '{vertex}'") from None

    def restrict(self, vertices: Iterable[str]) -> Tuple[str, ...]:
        lookup = self.as_dict
        return tuple(lookup.get(v) for v in vertices)

    def with_labels(self, updates: Mapping[str, str]) -> 'RState':
        merged = dict(self.as_dict)
        merged.update(updates)
        return RState.from_mapping(merged)

    def encode(self) -> str:
        """Canonical text form, e.g. ``1=N;2=E``."""
        return ";".join(f"{v}={s}" for v, s in self.labels)

    @classmethod
    def decode(cls, text: str) -> 'RState':
        """Inverse of :meth:`encode`."""
        mapping = {}
        for part in filter(None, (chunk.strip() for chunk in text.split(";"))):
            vertex, sep, symbol = part.partition("=")
            if not sep or not vertex:
                raise StateError(f"cannot parse state entry '{part}', expected vertex=symbol")
            if vertex in mapping:
                raise StateError(f"state labels vertex '{vertex}' twice")
            mapping[vertex] = symbol
        return cls.from_mapping(mapping)

    def to_dict(self) -> Dict[str, str]:
        return dict(self.labels)


@dataclass(frozen=True)
class Generator:
    """
    A local move.

    The move reads the vertices of ``support`` and rewrites those of
    ``trace``; it is admissible where the state agrees with ``local0``
    or ``local1`` on the support, and swaps one for the other.
    """

    name: str
    support: Tuple[str, ...]
    trace: Tuple[str, ...]
    local0: Labels
    local1: Labels
    move_names: Tuple[str, str] = ("", "")

    @classmethod
    def build(cls,
              name: str,
              support: Iterable[str],
              trace: Iterable[str],
              local0: Mapping[str, str],
              local1: Mapping[str, str],
              move_names: Optional[Sequence[str]] = None) -> 'Generator':
        """
        Build a generator and check its invariants.

        Raises:
            ValidationError: If the trace leaves the support, a local state is
                not total on the support, the local states differ off the
                trace, or agree somewhere on it
        """
        support_ids = tuple(canonical_sorted({str(v) for v in support}))
        trace_ids = tuple(canonical_sorted({str(v) for v in trace}))
        if not trace_ids:
            raise ValidationError(f"generator '{name}' has an empty trace")
        if not set(trace_ids) <= set(support_ids):
            raise ValidationError(f"generator '{name}' has trace outside its support")
        zero = {str(k): str(v) for k, v in local0.items()}
        one = {str(k): str(v) for k, v in local1.items()}
        for label, local in (("local0", zero), ("local1", one)):
            if set(local) != set(support_ids):
                raise ValidationError(f"generator '{name}' {label} must label exactly its support")
        for v in support_ids:
            on_trace = v in trace_ids
            if on_trace and zero[v] == one[v]:
                raise ValidationError(f"generator '{name}' does not change trace vertex '{v}'")
            if not on_trace and zero[v] != one[v]:
                raise ValidationError(f"generator '{name}' changes vertex '{v}' outside its trace")
        names = tuple(move_names) if move_names else (f"{name}+", f"{name}-")
        if len(names) != 2 or names[0] == names[1]:
            raise ValidationError(f"generator '{name}' needs two distinct move names")
        return cls(name, support_ids, trace_ids, _sorted_labels(zero), _sorted_labels(one), names)

    @cached_property
    def local_patterns(self) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
        zero, one = dict(self.local0), dict(self.local1)
        return tuple(zero[v] for v in self.support), tuple(one[v] for v in self.support)

    @cached_property
    def trace_updates(self) -> Tuple[Dict[str, str], Dict[str, str]]:
        """Labels written on the trace when moving towards local0 / local1."""
        zero, one = dict(self.local0), dict(self.local1)
        return {v: zero[v] for v in self.trace}, {v: one[v] for v in self.trace}

    def side(self, state: RState) -> Optional[int]:
        """0 or 1 for the local state matched at ``state``; None when inadmissible."""
        seen = state.restrict(self.support)
        zero, one = self.local_patterns
        if seen == zero:
            return 0
        if seen == one:
            return 1
        return None

    def move_name(self, side: int) -> str:
        """Name of the move that leaves local state ``side``."""
        return self.move_names[side]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "support": list(self.support),
            "trace": list(self.trace),
            "local0": dict(self.local0),
            "local1": dict(self.local1),
            "moves": list(self.move_names),
        }


def admissible(generator: Generator, state: RState) -> bool:
    return generator.side(state) is not None


def apply(generator: Generator, state: RState) -> RState:
    """
    Apply a generator: swap the local state on its support.

    Raises:
        StateError: If the generator is not admissible at ``state``
    """
    side = generator.side(state)
    if side is None:
        raise StateError(f"generator '{generator.name}' is not admissible at {state.encode()}")
    return state.with_labels(generator.trace_updates[1 - side])


def generators_commute(first: Generator, second: Generator) -> bool:
    return not (set(first.trace) & set(second.support)) and not (set(second.trace) & set(first.support))


def commute(generators: Sequence[Generator]) -> bool:
    """True iff every pair keeps its trace off the other's support."""
    return all(generators_commute(a, b) for a, b in combinations(generators, 2))


StateFilter = Callable[[RState], bool]
FilterBuilder = Callable[[Mapping[str, Any]], StateFilter]


@dataclass(frozen=True)
class ReconfigSystem:
    """A base graph, an alphabet, a set of generators and a seed state."""

    vertices: Tuple[str, ...]
    edges: Tuple[Tuple[str, str], ...]
    alphabet: Tuple[str, ...]
    generators: Tuple[Generator, ...]
    seed: RState
    name: str = "system"
    state_filter: Optional[StateFilter] = field(default=None, compare=False, repr=False)
    constraint: Optional[Dict[str, Any]] = field(default=None, compare=False, repr=False)

    @classmethod
    def build(cls,
              vertices: Iterable[str],
              edges: Iterable[Sequence[str]],
              alphabet: Iterable[str],
              generators: Iterable[Generator],
              seed: Mapping[str, str],
              name: str = "system",
              state_filter: Optional[StateFilter] = None,
              constraint: Optional[Mapping[str, Any]] = None) -> 'ReconfigSystem':
        """
        Build a system and check that every label and support fits the graph.

        ``constraint`` is the JSON description of ``state_filter``; a system
        carrying a filter without one cannot be written out.

        Raises:
            ValidationError: On unknown vertices or symbols, duplicate move names,
                or a seed that is not a total labelling
        """
        vertex_ids = tuple(canonical_sorted({str(v) for v in vertices}))
        known = set(vertex_ids)
        edge_pairs = []
        for edge in edges:
            a, b = (str(x) for x in edge)
            if a not in known or b not in known:
                raise ValidationError(f"edge ({a}, {b}) uses an unknown vertex")
            edge_pairs.append((a, b))
        symbols = tuple(str(s) for s in alphabet)
        symbol_set = set(symbols)
        gens = tuple(generators)
        move_names = set()
        for gen in gens:
            if not set(gen.support) <= known:
                raise ValidationError(f"generator '{gen.name}' has support outside the graph")
            for _, symbol in gen.local0 + gen.local1:
                if symbol not in symbol_set:
                    raise ValidationError(f"generator '{gen.name}' uses unknown symbol '{symbol}'")
            for move in gen.move_names:
                if move in move_names:
                    raise ValidationError(f"move name '{move}' is used twice")
                move_names.add(move)
        seed_state = RState.from_mapping(seed)
        if set(seed_state.as_dict) != known:
            raise ValidationError("seed must label every vertex of the graph")
        for vertex, symbol in seed_state.labels:
            if symbol not in symbol_set:
                raise ValidationError(f"seed labels vertex '{vertex}' with unknown symbol '{symbol}'")
        if constraint is not None and "kind" not in constraint:
            raise ValidationError("state constraint needs a 'kind'")
        return cls(vertex_ids, tuple(edge_pairs), symbols, gens, seed_state, name, state_filter,
                   dict(constraint) if constraint is not None else None)

    def accepts(self, state: RState) -> bool:
        return self.state_filter is None or self.state_filter(state)

    def validate_state(self, state: RState) -> RState:
        """Return ``state`` if it labels exactly the graph with known symbols."""
        if set(state.as_dict) != set(self.vertices):
            raise StateError(f"state {state.encode()} does not label exactly the graph vertices")
        for vertex, symbol in state.labels:
            if symbol not in self.alphabet:
                raise StateError(f"state labels '{vertex}' with unknown symbol '{symbol}'")
        if not self.accepts(state):
            raise StateError(f"state {state.encode()} is rejected by the system")
        return state

    @cached_property
    def commute_matrix(self) -> np.ndarray:
        """``M[i, j]`` true iff generators i and j commute (the diagonal is false)."""
        size = len(self.generators)
        matrix = np.zeros((size, size), dtype=bool)
        for i, j in combinations(range(size), 2):
            if generators_commute(self.generators[i], self.generators[j]):
                matrix[i, j] = matrix[j, i] = True
        return matrix

    @cached_property
    def moves(self) -> Dict[str, Tuple[int, int]]:
        """Move name to (generator index, side it starts from)."""
        table = {}
        for k, gen in enumerate(self.generators):
            table[gen.move_names[0]] = (k, 0)
            table[gen.move_names[1]] = (k, 1)
        return table

    def move_between(self, before: RState, after: RState) -> Tuple[int, str]:
        """
        The unique generator taking ``before`` to ``after``.

        Returns:
            Generator index and the move name

        Raises:
            StateError: If no generator or more than one does
        """
        found: List[Tuple[int, str]] = []
        for k, gen in enumerate(self.generators):
            side = gen.side(before)
            if side is not None and apply(gen, before) == after:
                found.append((k, gen.move_name(side)))
        if len(found) != 1:
            raise StateError(f"{len(found)} generators take {before.encode()} to {after.encode()}")
        return found[0]

    def to_dict(self) -> Dict[str, Any]:
        """
        The JSON system description.

        Raises:
            ValidationError: If the system has a state filter with no constraint description
        """
        if self.state_filter is not None and self.constraint is None:
            raise ValidationError(f"{self.name} has a state filter that cannot be written out")
        data: Dict[str, Any] = {
            "graph": {
                "vertices": list(self.vertices),
                "edges": [list(edge) for edge in self.edges],
            },
            "alphabet": list(self.alphabet),
            "generators": [gen.to_dict() for gen in self.generators],
            "seed": self.seed.to_dict(),
        }
        if self.constraint is not None:
            data["constraint"] = dict(self.constraint)
        return data

    @classmethod
    def from_dict(cls,
                  data: Dict[str, Any],
                  name: str = "system",
                  constraints: Optional[Mapping[str, FilterBuilder]] = None) -> 'ReconfigSystem':
        """
        Parse the JSON system description; generator names default to g0, g1, ...

        Args:
            data: The decoded description
            name: Name used when the description has none
            constraints: Builders of state filters, keyed by constraint kind

        Raises:
            ValidationError: If the description is malformed or names an unknown constraint
        """
        try:
            constraint = data.get("constraint")
            state_filter = None
            if constraint is not None:
                kind = constraint.get("kind")
                if kind not in (constraints or {}):
                    raise ValidationError(f"unknown state constraint {kind!r}")
                state_filter = constraints[kind](constraint)
            graph = data["graph"]
            generators = [
                Generator.build(
                    entry.get("name", f"g{k}"),
                    entry["support"],
                    entry["trace"],
                    entry["local0"],
                    entry["local1"],
                    entry.get("moves"),
                )
                for k, entry in enumerate(data["generators"])
            ]
            return cls.build(graph["vertices"], graph.get("edges", []), data["alphabet"],
                             generators, data["seed"], data.get("name", name), state_filter, constraint)
        except (KeyError, TypeError, AttributeError) as e:
            raise ValidationError(f"malformed system description: {e}") from e
