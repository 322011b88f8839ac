"""ADE singularity types, their Gram matrices, and surface specifications.

Each du Val singularity resolves into a configuration of (-2)-curves whose
dual graph is a Dynkin diagram of type A, D or E.  The Gram matrix of the
configuration is the negated Cartan matrix under a fixed node labeling, and
everything downstream (residual classes, decomposition budgets) is computed
against that labeling, so it is pinned here once and for all:

* ``A_k``: a chain, node ``i`` meets node ``i+1``.
* ``D_4``: node 1 is the central node, meeting nodes 2, 3, 4.
* ``D_k`` (k >= 5): node 3 is central; nodes 1 and 2 hang off it and the
  chain 3-4-...-k continues outward.
* ``E_k``: node 4 is central; node 1 hangs off node 4, node 2 hangs off
  node 3, and the chain 3-4-...-k runs through the center.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator


class InvalidSpec(ValueError):
    """Raised for malformed singularity types or over-budget surface specs."""


_TYPE_RE = re.compile(r"^([ADE])(\d+)$")

_RANK_BOUNDS = {
    "A": range(1, 9),
    "D": range(4, 9),
    "E": range(6, 9),
}


@dataclass(frozen=True, order=True)
class DynkinType:
    """One ADE singularity type, e.g. ``A4`` or ``E8``."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in _RANK_BOUNDS:
            raise InvalidSpec(f"unknown family {self.family!r}, expected A, D or E")
        if self.rank not in _RANK_BOUNDS[self.family]:
            lo = _RANK_BOUNDS[self.family][0]
            raise InvalidSpec(
                f"{self.family}{self.rank} is not a valid type "
                f"(need {lo} <= rank <= 8 for family {self.family})"
            )

    @classmethod
    def parse(cls, text: str) -> "DynkinType":
        m = _TYPE_RE.match(text.strip())
        if m is None:
            raise InvalidSpec(f"cannot parse singularity type {text!r}")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def all_types() -> tuple[DynkinType, ...]:
    """Every valid type of rank <= 8, in canonical (family, rank) order."""
    return tuple(
        DynkinType(fam, r) for fam in "ADE" for r in _RANK_BOUNDS[fam]
    )


def adjacency(t: DynkinType) -> frozenset[tuple[int, int]]:
    """Edge set of the Dynkin diagram under the module's labeling.

    Nodes are numbered 1..rank; each edge is returned once as (i, j), i < j.
    """
    k = t.rank
    if t.family == "A":
        edges = {(i, i + 1) for i in range(1, k)}
    elif t.family == "D" and k == 4:
        edges = {(1, 2), (1, 3), (1, 4)}
    elif t.family == "D":
        edges = {(1, 3), (2, 3)} | {(i, i + 1) for i in range(3, k)}
    else:  # E6, E7, E8
        edges = {(1, 4), (2, 3)} | {(i, i + 1) for i in range(3, k)}
    return frozenset(edges)


def gram_table(t: DynkinType) -> tuple[tuple[int, ...], ...]:
    """Gram matrix of the (-2)-curve configuration: -2 on the diagonal, 1
    for meeting curves, 0 otherwise (the negated Cartan matrix)."""
    k = t.rank
    edges = adjacency(t)
    rows = []
    for i in range(1, k + 1):
        row = []
        for j in range(1, k + 1):
            if i == j:
                row.append(-2)
            elif (min(i, j), max(i, j)) in edges:
                row.append(1)
            else:
                row.append(0)
        rows.append(tuple(row))
    return tuple(rows)


def fundamental_cycle(t: DynkinType) -> tuple[int, ...]:
    """Smallest z >= (1,...,1) with (G z)_i <= 0 for every node i.

    Computed by the usual increment loop: while some node pairs positively
    with z, bump that node.  Terminates for negative definite G.
    """
    g = gram_table(t)
    k = t.rank
    z = [1] * k
    while True:
        for i in range(k):
            if sum(g[i][j] * z[j] for j in range(k)) > 0:
                z[i] += 1
                break
        else:
            return tuple(z)


@dataclass(frozen=True)
class SurfaceSpec:
    """A degree together with a multiset of singularity types.

    Instances are normally produced by :func:`validate_spec`, which sorts
    the singularities into canonical order and checks the rank budget.
    """

    degree: int
    singularities: tuple[DynkinType, ...] = ()

    @property
    def total_rank(self) -> int:
        return sum(t.rank for t in self.singularities)

    @property
    def singularity_label(self) -> str:
        """Human-readable multiset, e.g. ``2A1+2A3`` or ``smooth``."""
        if not self.singularities:
            return "smooth"
        parts = []
        for t, group in itertools.groupby(sorted(self.singularities)):
            n = len(list(group))
            parts.append(f"{n}{t}" if n > 1 else str(t))
        return "+".join(parts)

    def __str__(self) -> str:
        return f"degree {self.degree}, {self.singularity_label}"


def validate_spec(
    degree: int, singularities: Iterable[DynkinType | str] = ()
) -> SurfaceSpec:
    """Check degree and rank budget; return the spec in canonical order.

    The exceptional curves all live in the orthogonal complement of the
    canonical class inside a unimodular lattice of rank 10 - degree, so the
    total number of nodes can be at most 9 - degree.
    """
    if not isinstance(degree, int) or not 1 <= degree <= 9:
        raise InvalidSpec(f"degree must be an integer in [1, 9], got {degree!r}")
    resolved = tuple(
        t if isinstance(t, DynkinType) else DynkinType.parse(t)
        for t in singularities
    )
    spec = SurfaceSpec(degree, tuple(sorted(resolved)))
    budget = 9 - degree
    if spec.total_rank > budget:
        raise InvalidSpec(
            f"rank budget exceeded: total rank {spec.total_rank} > {budget} "
            f"allowed at degree {degree} (over by {spec.total_rank - budget})"
        )
    return spec


def picard_rank(spec: SurfaceSpec) -> int:
    """10 - degree - (number of exceptional curves); always >= 1."""
    return 10 - spec.degree - spec.total_rank


def enumerate_specs() -> Iterator[SurfaceSpec]:
    """All valid specs, degree ascending, singularities in canonical order.

    Multisets are generated with types nondecreasing, which yields each
    collection exactly once.
    """
    types = all_types()

    def collections(budget: int, start: int) -> Iterator[tuple[DynkinType, ...]]:
        yield ()
        for idx in range(start, len(types)):
            t = types[idx]
            if t.rank > budget:
                continue
            for rest in collections(budget - t.rank, idx):
                yield (t,) + rest

    for degree in range(1, 10):
        seen = sorted(set(collections(9 - degree, 0)))
        for coll in seen:
            yield SurfaceSpec(degree, tuple(sorted(coll)))
