"""Observable functions evaluated on nonzero projections.

The value at a projection P is the smallest spectral threshold whose
cumulative dominates P.  These functions are completely increasing: the
value at a join of projections is the maximum of the values.
"""

from __future__ import annotations

from dataclasses import dataclass, InitVar
from typing import Sequence

import numpy as np

from .linalg import (
    DEFAULT_TOL,
    DimensionMismatch,
    InvariantViolation,
    OperatorLike,
    Projection,
    Tolerances,
    as_operator,
    leq_proj,
    proj_join,
)
from .family import spectral_family_of
from .order import leq_spectral


@dataclass(frozen=True, eq=False)
class PrincipalIdealPoint:
    """A nonzero projection, the evaluation point of an observable function.

    It stands for the upward-closed set of all projections above it; only
    these principal points are represented.
    """

    projection: Projection
    tol: InitVar[Tolerances | None] = None

    def __post_init__(self, tol):
        t = tol or DEFAULT_TOL
        if float(np.linalg.norm(self.projection.entries)) <= t.proj_tol:
            raise InvariantViolation("the zero projection is excluded")

    @property
    def dim(self) -> int:
        return self.projection.dim


def r_value(a: OperatorLike, point: PrincipalIdealPoint | Projection,
            tol: Tolerances | None = None) -> float:
    """Smallest breakpoint whose cumulative dominates the given projection.

    The top cumulative is the identity, so the minimum is always attained.
    """
    t = tol or DEFAULT_TOL
    if isinstance(point, Projection):
        point = PrincipalIdealPoint(point, t)
    op = as_operator(a)
    if op.dim != point.dim:
        raise DimensionMismatch(f"dimensions differ: {op.dim} vs {point.dim}")
    fam = spectral_family_of(op, t)
    for lam, q in zip(fam.breakpoints, fam.cumulatives):
        if leq_proj(point.projection, q, t):
            return lam
    raise InvariantViolation("top cumulative failed to dominate a projection")


def completely_increasing_check(a: OperatorLike,
                                points: Sequence[PrincipalIdealPoint],
                                tol: Tolerances | None = None) -> bool:
    """Check that the value at the join of the points is the max of values."""
    t = tol or DEFAULT_TOL
    if len(points) == 0:
        raise InvariantViolation("need a nonempty list of points")
    joined = points[0].projection
    for p in points[1:]:
        joined = proj_join(joined, p.projection, t)
    lhs = r_value(a, PrincipalIdealPoint(joined, t), t)
    rhs = max(r_value(a, p, t) for p in points)
    return abs(lhs - rhs) <= t.bp_tol * max(1.0, abs(lhs), abs(rhs))


def observable_order_check(a: OperatorLike, b: OperatorLike,
                           points: Sequence[PrincipalIdealPoint],
                           tol: Tolerances | None = None) -> bool:
    """Consistency of the observable functions with the spectral order.

    When a is below b in the spectral order, the value of a is below the
    value of b at every sampled point.  When it is not, finitely many
    points cannot certify the converse, so the check is vacuously true;
    callers interested in a witness search the points directly.
    """
    t = tol or DEFAULT_TOL
    a, b = as_operator(a), as_operator(b)
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimensions differ: {a.dim} vs {b.dim}")
    if not leq_spectral(a, b, t):
        return True
    slack = t.bp_tol * max(1.0, a.norm, b.norm)
    return all(r_value(a, p, t) <= r_value(b, p, t) + slack for p in points)
