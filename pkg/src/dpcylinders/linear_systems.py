"""Dimension counting for complete linear systems and multiplicity budgets.

On a rational surface with vanishing higher cohomology, the dimension of the
complete system of a class F is F.(F - K)/2.  Imposing multiplicity >= m at
a point cuts at most m(m+1)/2 dimensions.  Both facts are used as exact
integer bookkeeping; nothing here verifies the vanishing hypotheses, and the
reported value is the expected dimension.
"""

from __future__ import annotations

from math import isqrt

from .divisors import DivisorClass, GramTable


def dim_complete(table: GramTable, c: DivisorClass) -> int:
    """Expected dimension of the complete linear system of ``c``.

    Rejects classes where c.(c - K) comes out odd or fractional; every
    integral class on a smooth surface has even c.(c - K), so a violation
    means the input was not an honest integral class.
    """
    k = table.canonical_class()
    value = table.intersect(c, c - k)
    if value.denominator != 1 or value.numerator % 2 != 0:
        raise ValueError(
            f"c.(c - K) = {value} is not an even integer; "
            "not the class of an integral divisor"
        )
    return int(value) // 2


def conditions(m: int) -> int:
    """Number of linear conditions imposed by multiplicity >= m at a point."""
    if m < 0:
        raise ValueError(f"multiplicity must be nonnegative, got {m}")
    return m * (m + 1) // 2


def subsystem_dim(dim: int, m: int) -> int:
    """Expected dimension after imposing multiplicity >= m; may be negative,
    in which case the subsystem is not guaranteed non-empty."""
    return dim - conditions(m)


def max_multiplicity_budget(dim: int) -> int:
    """Largest m with conditions(m) <= dim, i.e. the biggest multiplicity a
    system of that dimension can afford at one point."""
    if dim < 0:
        raise ValueError(f"dimension must be nonnegative, got {dim}")
    # m(m+1)/2 <= dim  <=>  m <= (sqrt(8*dim + 1) - 1)/2, exactly in integers
    return (isqrt(8 * dim + 1) - 1) // 2
