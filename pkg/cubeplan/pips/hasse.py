"""
Plain-text Hasse diagrams; inconsistent pairs are drawn as dotted links.
"""
from typing import Dict, List

from .ideals import depth
from .pip import Pip


def element_ranks(pip: Pip) -> Dict[str, int]:
    """Rank of each element: length of the longest chain ending below it."""
    return {e: depth(pip, pip.down_masks[pip.index[e]]) - 1 for e in pip.elements}


def render_hasse(pip: Pip) -> str:
    normal = pip.normalized()
    ranks = element_ranks(normal)
    top = max(ranks.values(), default=-1)
    width = len(str(max(top, 0)))

    covers = normal.sort_pairs(normal.covers)
    dotted = normal.sort_pairs(normal.inconsistent)
    lines: List[str] = [
        f"PIP with {len(normal)} elements, {len(covers)} covers, "
        f"{len(dotted)} minimal inconsistent pairs"
    ]
    for rank in range(top, -1, -1):
        row = [e for e in normal.elements if ranks[e] == rank]
        lines.append(f"  {rank:>{width}} | " + "   ".join(row))

    lines.append("covers:")
    lines.extend(f"  {a} < {b}" for a, b in covers)
    if not covers:
        lines.append("  (none)")
    lines.append("inconsistent:")
    lines.extend(f"  {a} ..... {b}" for a, b in dotted)
    if not dotted:
        lines.append("  (none)")
    return "\n".join(lines)
