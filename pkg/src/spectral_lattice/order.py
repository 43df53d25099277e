"""The spectral order on Hermitian matrices and its lattice operations.

A is below B in the spectral order when every spectral projection of B is
below the corresponding one of A (note the reversal).  The order is coarser
than the usual one, agrees with it on commuting pairs and on projections,
and carries lattice operations defined through the spectral families.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .linalg import (
    DEFAULT_TOL,
    DimensionMismatch,
    Effect,
    HermitianOperator,
    InvariantViolation,
    OperatorLike,
    Projection,
    SpectralBounds,
    Tolerances,
    as_operator,
    proj_join,
    proj_meet,
    leq_proj,
    spectral_bounds,
)
from .family import (
    StepSpectralFamily,
    eval_at,
    merged_breakpoints,
    reconstruct,
    spectral_family_of,
)


def leq_spectral(a: OperatorLike, b: OperatorLike,
                 tol: Tolerances | None = None) -> bool:
    """True when a is below b in the spectral order.

    Both step families are constant between consecutive merged breakpoints,
    so checking projection domination at the merged breakpoints alone is
    exhaustive.
    """
    t = tol or DEFAULT_TOL
    a, b = as_operator(a), as_operator(b)
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimensions differ: {a.dim} vs {b.dim}")
    fam_a = spectral_family_of(a, t)
    fam_b = spectral_family_of(b, t)
    for lam in merged_breakpoints((fam_a, fam_b), t):
        if not leq_proj(eval_at(fam_b, lam), eval_at(fam_a, lam), t):
            return False
    return True


def _assemble_family(dim: int, points: Sequence[float],
                     projs: Sequence[Projection],
                     tol: Tolerances) -> StepSpectralFamily:
    # Drop grid points where the cumulative does not jump.  A genuine jump
    # raises the rank, so its Frobenius norm is at least 1.
    breakpoints = []
    cumulatives = []
    prev = np.zeros((dim, dim), dtype=np.complex128)
    for lam, q in zip(points, projs):
        if np.linalg.norm(q.entries - prev) >= 0.5:
            breakpoints.append(lam)
            cumulatives.append(q)
            prev = q.entries
    return StepSpectralFamily(dim, tuple(breakpoints), tuple(cumulatives), tol)


def _pointwise_meet_family(families: Sequence[StepSpectralFamily],
                           tol: Tolerances) -> StepSpectralFamily:
    """Family of the spectral join: the pointwise meet of the cumulatives."""
    grid = merged_breakpoints(families, tol)
    projs = []
    for lam in grid:
        cur = eval_at(families[0], lam)
        for fam in families[1:]:
            cur = proj_meet(cur, eval_at(fam, lam), tol)
        projs.append(cur)
    return _assemble_family(families[0].dim, grid, projs, tol)


def _right_limit_join_family(families: Sequence[StepSpectralFamily],
                             tol: Tolerances) -> StepSpectralFamily:
    """Family of the spectral meet: the right limit of the pointwise join.

    On a finite grid the infimum over mu > lam is attained just right of
    lam, where every family is constant, so it is evaluated at the midpoint
    to the next grid point (one past the last).  No epsilon parameter.
    """
    grid = merged_breakpoints(families, tol)
    projs = []
    for i, lam in enumerate(grid):
        mu = (lam + grid[i + 1]) / 2.0 if i + 1 < len(grid) else lam + 1.0
        cur = eval_at(families[0], mu)
        for fam in families[1:]:
            cur = proj_join(cur, eval_at(fam, mu), tol)
        projs.append(cur)
    return _assemble_family(families[0].dim, grid, projs, tol)


def _families_of(ops: Sequence[HermitianOperator],
                 tol: Tolerances) -> list[StepSpectralFamily]:
    dim = ops[0].dim
    for op in ops[1:]:
        if op.dim != dim:
            raise DimensionMismatch(f"dimensions differ: {dim} vs {op.dim}")
    return [spectral_family_of(op, tol) for op in ops]


def spectral_join(a: OperatorLike, b: OperatorLike,
                  tol: Tolerances | None = None) -> HermitianOperator:
    """Least upper bound of a and b in the spectral order."""
    t = tol or DEFAULT_TOL
    fams = _families_of([as_operator(a), as_operator(b)], t)
    return reconstruct(_pointwise_meet_family(fams, t), t)


def spectral_meet(a: OperatorLike, b: OperatorLike,
                  tol: Tolerances | None = None) -> HermitianOperator:
    """Greatest lower bound of a and b in the spectral order."""
    t = tol or DEFAULT_TOL
    fams = _families_of([as_operator(a), as_operator(b)], t)
    return reconstruct(_right_limit_join_family(fams, t), t)


def family_sup(effects: Sequence[Effect],
               tol: Tolerances | None = None) -> Effect:
    """Supremum of a finite nonempty family of effects.

    Restricted to effects because an order-unbounded family of Hermitian
    matrices has no supremum; within [0, I] every family does.
    """
    t = tol or DEFAULT_TOL
    if len(effects) == 0:
        raise InvariantViolation("family_sup needs a nonempty family")
    fams = _families_of([as_operator(e) for e in effects], t)
    return Effect(reconstruct(_pointwise_meet_family(fams, t), t), t)


def family_inf(effects: Sequence[Effect],
               tol: Tolerances | None = None) -> Effect:
    """Infimum of a finite nonempty family of effects."""
    t = tol or DEFAULT_TOL
    if len(effects) == 0:
        raise InvariantViolation("family_inf needs a nonempty family")
    fams = _families_of([as_operator(e) for e in effects], t)
    return Effect(reconstruct(_right_limit_join_family(fams, t), t), t)


@dataclass(frozen=True)
class CombinationBounds:
    """Spectral bounds of the lattice meet and join of a pair."""

    meet: SpectralBounds
    join: SpectralBounds


def bounds_of_combination(a: OperatorLike, b: OperatorLike,
                          tol: Tolerances | None = None) -> CombinationBounds:
    """Bounds of the meet and join, checked against the endpoint identities.

    The meet's lower bound is the minimum of the inputs' lower bounds and
    the join's upper bound is the maximum of the inputs' upper bounds; the
    other two endpoints satisfy one-sided estimates.  Violations beyond
    tolerance raise InvariantViolation.
    """
    t = tol or DEFAULT_TOL
    a, b = as_operator(a), as_operator(b)
    ba, bb = spectral_bounds(a), spectral_bounds(b)
    meet_bounds = spectral_bounds(spectral_meet(a, b, t))
    join_bounds = spectral_bounds(spectral_join(a, b, t))
    scale = max(1.0, *(abs(v) for v in
                       (ba.m, ba.M, bb.m, bb.M)))
    slack = t.recon_tol * scale
    checks = [
        abs(meet_bounds.m - min(ba.m, bb.m)) <= slack,
        meet_bounds.M <= min(ba.M, bb.M) + slack,
        join_bounds.m >= max(ba.m, bb.m) - slack,
        abs(join_bounds.M - max(ba.M, bb.M)) <= slack,
    ]
    if not all(checks):
        raise InvariantViolation(
            f"spectral bound identities violated: {checks} for "
            f"meet={meet_bounds}, join={join_bounds}, a={ba}, b={bb}")
    return CombinationBounds(meet=meet_bounds, join=join_bounds)
