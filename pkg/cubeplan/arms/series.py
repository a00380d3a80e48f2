"""
Cube counts of the arm state complexes.

The number of d-cubes for arm length n is the coefficient of x^n y^d in

    quadrant:  (1 + xy) / (1 - 2x - x^2 y)
    strip:     (1 + x + xy + x^2 y) / (1 - x - x^2 - x^3 y)

Counts are computed twice, by enumerating partial paths and by exact
series division, and must agree.
"""
import logging
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import pandas as pd
import sympy as sp

from ..config.constants import QUADRANT, STRIP
from ..core.exceptions import CapExceededError, SeriesMismatchError, ValidationError
from .paths import enumerate_partial_paths

logger = logging.getLogger(__name__)

x, y = sp.symbols('x y')

# (numerator, denominator) pairs
GENERATING_FUNCTIONS: Dict[str, Tuple[sp.Expr, sp.Expr]] = {
    QUADRANT: (1 + x * y, 1 - 2 * x - x ** 2 * y),
    STRIP: (1 + x + x * y + x ** 2 * y, 1 - x - x ** 2 - x ** 3 * y),
}

METHOD_ENUMERATION = 'enumeration'
METHOD_SERIES = 'series'


def _generating_function(flavor: str) -> Tuple[sp.Expr, sp.Expr]:
    try:
        return GENERATING_FUNCTIONS[flavor]
    except KeyError:
        raise ValidationError(f"unknown robot type '{flavor}'") from None


@lru_cache(maxsize=None)
def series_coefficients(flavor: str, order: int) -> Tuple[sp.Expr, ...]:
    """
    Coefficients c_0 .. c_order (polynomials in y) of the generating function in x.

    Long division: with numerator sum N_k x^k and denominator sum D_k x^k
    (D_0 = 1), c_k = N_k - sum_{j=1..k} D_j c_{k-j}.
    """
    numerator, denominator = _generating_function(flavor)
    num = sp.Poly(numerator, x)
    den = sp.Poly(denominator, x)
    n_coeffs = [sp.expand(num.coeff_monomial(x ** k)) for k in range(order + 1)]
    d_coeffs = [sp.expand(den.coeff_monomial(x ** k)) for k in range(order + 1)]
    if d_coeffs[0] != 1:
        raise ValidationError("generating function denominator must have constant term 1")
    coefficients: List[sp.Expr] = []
    for k in range(order + 1):
        value = n_coeffs[k] - sum(d_coeffs[j] * coefficients[k - j] for j in range(1, k + 1))
        coefficients.append(sp.expand(value))
    return tuple(coefficients)


def series_counts(n: int, flavor: str, max_order: int = 64) -> Tuple[int, ...]:
    """Counts of d-cubes, d = 0..n, read off the generating function."""
    if n > max_order:
        raise CapExceededError(f"series order {n}", max_order)
    coefficient = sp.Poly(series_coefficients(flavor, n)[n], y)
    counts = [0] * (n + 1)
    for (degree,), value in coefficient.terms():
        counts[degree] = int(value)
    return tuple(counts)


def enumeration_counts(n: int, flavor: str, cap: Optional[int] = None, progress: bool = False) -> Tuple[int, ...]:
    """Counts of d-cubes, d = 0..n, by enumerating partial paths."""
    counts = [0] * (n + 1)
    for path in enumerate_partial_paths(n, flavor, cap, progress):
        counts[path.dimension] += 1
    return tuple(counts)


def cube_counts(n: int, flavor: str, method: str = 'both', cap: Optional[int] = None,
                max_order: int = 64) -> Tuple[int, ...]:
    """
    Number of d-cubes in the state complex of the arm of length n, d = 0..n.

    Args:
        n: Arm length
        flavor: 'quadrant' or 'strip'
        method: 'enumeration', 'series' or 'both'
        cap: Maximum number of partial paths to enumerate
        max_order: Maximum series order

    Returns:
        Exact counts indexed by dimension

    Raises:
        SeriesMismatchError: If both methods run and disagree
    """
    if n < 0:
        raise ValidationError(f"arm length must be non-negative, got {n}")
    if method == METHOD_SERIES:
        return series_counts(n, flavor, max_order)
    if method == METHOD_ENUMERATION:
        return enumeration_counts(n, flavor, cap)
    if method != 'both':
        raise ValidationError(f"unknown counting method '{method}'")
    enumerated = enumeration_counts(n, flavor, cap)
    expanded = series_counts(n, flavor, max_order)
    if enumerated != expanded:
        raise SeriesMismatchError(
            f"{flavor} n={n}: partial paths give {list(enumerated)} but the series gives {list(expanded)}"
        )
    return enumerated


def state_count(n: int, flavor: str) -> int:
    """Number of states: 2^n for the quadrant arm, the (n+2)-th Fibonacci number for the strip."""
    if flavor == QUADRANT:
        return 2 ** n
    if flavor == STRIP:
        return int(sp.fibonacci(n + 2))
    raise ValidationError(f"unknown robot type '{flavor}'")


def count_table(lengths: Sequence[int], flavor: str, cap: Optional[int] = None, max_order: int = 64) -> pd.DataFrame:
    """
    Cube counts for several arm lengths, one row per (n, d).

    Columns: n, d, enumeration, series, match.
    """
    rows = []
    for n in lengths:
        enumerated = enumeration_counts(n, flavor, cap)
        expanded = series_counts(n, flavor, max_order)
        for d in range(n + 1):
            rows.append({
                "n": n,
                "d": d,
                "enumeration": enumerated[d],
                "series": expanded[d],
                "match": enumerated[d] == expanded[d],
            })
    return pd.DataFrame(rows, columns=["n", "d", "enumeration", "series", "match"])
