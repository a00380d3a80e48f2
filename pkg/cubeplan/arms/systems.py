"""
Reconfigurable systems for the arms (as particle boards) and the unpinned snake.
"""
from typing import Any, Dict, FrozenSet, List, Mapping, Set, Tuple

import networkx as nx

from ..config.constants import EMPTY, HORIZONTAL, OCCUPIED, QUADRANT, SNAKE, STRIP, VERTICAL
from ..core.exceptions import ValidationError
from ..reconfig import Generator, ReconfigSystem, RState
from ..reconfig.system import FilterBuilder, StateFilter

Point = Tuple[int, int]


def _slot_graph(n: int) -> Tuple[List[str], List[Tuple[str, str]]]:
    slots = [str(i) for i in range(1, n + 1)]
    return slots, [(str(i), str(i + 1)) for i in range(1, n)]


def _hop(i: int, n: int, guard: bool) -> Generator:
    """Particle hop between slots i and i+1; ``guard`` keeps the outer neighbours empty."""
    left, right = str(i), str(i + 1)
    guards = [str(j) for j in (i - 1, i + 2) if guard and 1 <= j <= n]
    local0 = {left: VERTICAL, right: HORIZONTAL}
    local1 = {left: HORIZONTAL, right: VERTICAL}
    for g in guards:
        local0[g] = local1[g] = HORIZONTAL
    return Generator.build(
        f"hop@{i}",
        [left, right] + guards,
        [left, right],
        local0,
        local1,
        (f"hop_right@{i}", f"hop_left@{i + 1}"),
    )


def _end_flip(n: int, guard: bool) -> Generator:
    """A particle enters or leaves at slot n."""
    last = str(n)
    support = [last]
    local0 = {last: HORIZONTAL}
    local1 = {last: VERTICAL}
    if guard and n > 1:
        support.append(str(n - 1))
        local0[str(n - 1)] = local1[str(n - 1)] = HORIZONTAL
    return Generator.build(f"end@{n}", support, [last], local0, local1, (f"enter@{n}", f"leave@{n}"))


def _arm_system(kind: str, n: int, guard: bool) -> ReconfigSystem:
    if n < 1:
        raise ValidationError(f"arm length must be at least 1, got {n}")
    slots, edges = _slot_graph(n)
    generators = [_hop(i, n, guard) for i in range(1, n)] + [_end_flip(n, guard)]
    seed = {slot: HORIZONTAL for slot in slots}
    return ReconfigSystem.build(slots, edges, (HORIZONTAL, VERTICAL), generators, seed, f"{kind}-{n}")


def quadrant_system(n: int) -> ReconfigSystem:
    """
    The arm of length n in the quadrant, as hopping particles on n slots.

    Slot i holds a particle when link i points north; particles hop to a
    free neighbouring slot and enter or leave through slot n.
    """
    return _arm_system(QUADRANT, n, guard=False)


def strip_system(n: int) -> ReconfigSystem:
    """
    The arm of length n in a strip of width 1, as repellent particles.

    Particles keep distance at least 2, so each hop also requires the
    slots flanking the pair to be empty.
    """
    return _arm_system(STRIP, n, guard=True)


def robot_system(kind: str, n: int) -> ReconfigSystem:
    if kind == QUADRANT:
        return quadrant_system(n)
    if kind == STRIP:
        return strip_system(n)
    raise ValidationError(f"unknown robot type '{kind}'")


# -- unpinned snake ----------------------------------------------------------

def _segment_id(a: Point, b: Point) -> str:
    (x1, y1), (x2, y2) = sorted((a, b))
    return f"{'h' if y1 == y2 else 'v'}{x1},{y1}"


def _grid_segments(rows: int, cols: int) -> Dict[str, Tuple[Point, Point]]:
    segments = {}
    for x in range(cols + 1):
        for y in range(rows + 1):
            if x < cols:
                segments[_segment_id((x, y), (x + 1, y))] = ((x, y), (x + 1, y))
            if y < rows:
                segments[_segment_id((x, y), (x, y + 1))] = ((x, y), (x, y + 1))
    return segments


def _snake_filter(length: int, segments: Dict[str, Tuple[Point, Point]]) -> StateFilter:
    def _accepts(state: RState) -> bool:
        occupied = [segments.get(s) for s, label in state.labels if label == OCCUPIED]
        if len(occupied) != length or None in occupied:
            return False
        path = nx.Graph(occupied)
        if not nx.is_connected(path):
            return False
        degrees = [d for _, d in path.degree()]
        return max(degrees) <= 2 and path.number_of_nodes() == length + 1
    return _accepts


def snake_system(length: int, rows: int, cols: int) -> ReconfigSystem:
    """
    The unpinned snake of ``length`` links in a grid of rows x cols unit cells.

    Base-graph vertices are the grid segments, labelled occupied or empty.
    Each cell carries end flips (a free end link swings about the corner it
    shares with the next link) and corner switches (two links meeting at a
    corner move to the opposite corner). Self-intersecting positions are
    rejected during exploration.
    """
    if length < 1 or rows < 1 or cols < 1:
        raise ValidationError("snake length and grid size must be at least 1")
    if length > cols:
        raise ValidationError(f"a snake of length {length} does not fit along {cols} columns")
    segments = _grid_segments(rows, cols)
    incident: Dict[Point, Set[str]] = {}
    for seg, (a, b) in segments.items():
        incident.setdefault(a, set()).add(seg)
        incident.setdefault(b, set()).add(seg)

    generators: List[Generator] = []
    for x in range(cols):
        for y in range(rows):
            corners = [(x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)]
            for k, pivot in enumerate(corners):
                p, q = corners[k - 1], corners[(k + 1) % 4]
                opposite = corners[(k + 2) % 4]
                first, second = _segment_id(pivot, p), _segment_id(pivot, q)
                cell = f"{x},{y}"
                ends: FrozenSet[str] = frozenset(incident[p] | incident[q])
                local0 = {s: EMPTY for s in ends}
                local1 = dict(local0)
                local0[first] = OCCUPIED
                local1[second] = OCCUPIED
                generators.append(Generator.build(
                    f"flip[{cell}]@{pivot[0]},{pivot[1]}",
                    ends | {first, second},
                    [first, second],
                    local0,
                    local1,
                ))
                if k < 2:
                    far1, far2 = _segment_id(opposite, p), _segment_id(opposite, q)
                    sides = [first, second, far1, far2]
                    generators.append(Generator.build(
                        f"switch[{cell}]@{pivot[0]},{pivot[1]}",
                        sides,
                        sides,
                        {first: OCCUPIED, second: OCCUPIED, far1: EMPTY, far2: EMPTY},
                        {first: EMPTY, second: EMPTY, far1: OCCUPIED, far2: OCCUPIED},
                    ))

    seed = {seg: EMPTY for seg in segments}
    for x in range(length):
        seed[_segment_id((x, 0), (x + 1, 0))] = OCCUPIED
    edges = []
    for point, segs in incident.items():
        ordered = sorted(segs)
        edges.extend((a, b) for i, a in enumerate(ordered) for b in ordered[i + 1:])
    return ReconfigSystem.build(
        segments, sorted(set(edges)), (EMPTY, OCCUPIED), generators, seed,
        f"snake-{length}-{rows}x{cols}", _snake_filter(length, segments),
        {"kind": SNAKE, "length": length, "rows": rows, "cols": cols},
    )


def _snake_constraint(constraint: Mapping[str, Any]) -> StateFilter:
    """Rebuild the non-self-intersection filter of a snake system read from JSON."""
    try:
        length, rows, cols = (int(constraint[key]) for key in ("length", "rows", "cols"))
    except (KeyError, TypeError, ValueError):
        raise ValidationError("snake constraint needs integer 'length', 'rows' and 'cols'") from None
    if length < 1 or rows < 1 or cols < 1:
        raise ValidationError("snake length and grid size must be at least 1")
    return _snake_filter(length, _grid_segments(rows, cols))


STATE_CONSTRAINTS: Dict[str, FilterBuilder] = {SNAKE: _snake_constraint}
