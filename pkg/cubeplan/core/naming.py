"""
Canonical ordering helpers for element, vertex and state identifiers.
"""
import re
from typing import Iterable, List, Tuple, Union

_DIGITS = re.compile(r'(\d+)')


def natural_key(identifier: str) -> Tuple[Union[int, str], ...]:
    """Sort key that orders embedded integers numerically ("2,0" before "10,0")."""
    parts = _DIGITS.split(str(identifier))
    return tuple(int(part) if part.isdigit() else part for part in parts)


def canonical_sorted(identifiers: Iterable[str]) -> List[str]:
    """Sort identifiers canonically; ties are broken by the raw string."""
    return sorted(identifiers, key=lambda ident: (natural_key(ident), str(ident)))
