"""Free, Kleene and Brouwer complements, range projections, the hull map
onto the projection lattice, and block-diagonal tensor lifting.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import (
    DEFAULT_TOL,
    DimensionMismatch,
    Effect,
    HermitianOperator,
    InvariantViolation,
    OperatorLike,
    Projection,
    Tolerances,
    as_operator,
    hermitian,
    identity,
    leq_proj,
    proj_join,
    proj_meet,
)
from .family import StepSpectralFamily, eval_at, spectral_family_of
from .order import spectral_join, spectral_meet


def free_complement(family: StepSpectralFamily,
                    tol: Tolerances | None = None) -> StepSpectralFamily:
    """The spectral family of -A, given the family of A.

    Breakpoints are negated and reversed; the cumulative at the new
    breakpoint -lam_i is I minus the cumulative just below lam_i, which
    restores right-continuity after the reflection.  Applying it twice is
    the identity.
    """
    t = tol or DEFAULT_TOL
    m = len(family.breakpoints)
    eye = identity(family.dim)
    breakpoints = []
    cumulatives = []
    for j in range(m):
        i = m - 1 - j
        breakpoints.append(-family.breakpoints[i])
        if i >= 1:
            below = family.cumulatives[i - 1].underlying
        else:
            below = 0.0 * eye
        cumulatives.append(Projection(eye - below, t))
    return StepSpectralFamily(family.dim, tuple(breakpoints),
                              tuple(cumulatives), t)


def kleene_complement(a: Effect, tol: Tolerances | None = None) -> Effect:
    """I - A, an involution on effects."""
    t = tol or DEFAULT_TOL
    if not isinstance(a, Effect):
        raise InvariantViolation("kleene_complement expects an Effect")
    return Effect(identity(a.dim) - a.underlying, t)


def _kernel_cumulative(a: Effect, tol: Tolerances) -> Projection:
    # The cumulative at zero.  Eigenvalues of an exact kernel land within
    # machine jitter of 0, so the cut is taken at psd_tol rather than 0.
    fam = spectral_family_of(a, tol)
    return eval_at(fam, tol.psd_tol)


def range_projection(a: Effect, tol: Tolerances | None = None) -> Projection:
    """Orthogonal projection onto the closure of the image of an effect.

    This is the smallest projection dominating the effect, and equals the
    complement of the family value at zero.
    """
    t = tol or DEFAULT_TOL
    if not isinstance(a, Effect):
        raise InvariantViolation("range_projection expects an Effect")
    return _kernel_cumulative(a, t).complement()


def brouwer_complement(a: Effect, tol: Tolerances | None = None) -> Projection:
    """The projection onto the kernel: I - range_projection(a)."""
    t = tol or DEFAULT_TOL
    if not isinstance(a, Effect):
        raise InvariantViolation("brouwer_complement expects an Effect")
    return _kernel_cumulative(a, t)


@dataclass(frozen=True)
class HullCheck:
    """Outcome of comparing the hull of a lattice combination with the
    lattice combination of the hulls."""

    join_equal: bool
    meet_leq_strict: bool


def hull_check(a: Effect, b: Effect,
               tol: Tolerances | None = None) -> HullCheck:
    """Compare range projections of meet/join with meet/join of ranges.

    ``join_equal`` must always hold.  The meet direction always satisfies
    one containment; ``meet_leq_strict`` reports whether it is strict,
    which never happens in a matrix algebra.  A failed containment raises.
    """
    t = tol or DEFAULT_TOL
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimensions differ: {a.dim} vs {b.dim}")
    ra, rb = range_projection(a, t), range_projection(b, t)

    r_join = range_projection(Effect(spectral_join(a, b, t), t), t)
    join_of_ranges = proj_join(ra, rb, t)
    join_equal = bool(
        np.linalg.norm(r_join.entries - join_of_ranges.entries)
        <= 10.0 * t.recon_tol)

    r_meet = range_projection(Effect(spectral_meet(a, b, t), t), t)
    meet_of_ranges = proj_meet(ra, rb, t)
    if not leq_proj(r_meet, meet_of_ranges, t):
        raise InvariantViolation(
            "hull of the meet is not below the meet of the hulls")
    strict = bool(
        np.linalg.norm(r_meet.entries - meet_of_ranges.entries) > 0.5)
    return HullCheck(join_equal=join_equal, meet_leq_strict=strict)


def tensor_lift(m: int, a: OperatorLike, tol: Tolerances | None = None):
    """Block-diagonal operator with m copies of ``a``.

    The matrix realization of tensoring with an m-dimensional identity.
    Preserves the wrapper type: projections lift to projections, effects
    to effects.  The lift reflects the usual order, commutes with the
    projection lattice operations, and lifts spectral families pointwise.
    """
    t = tol or DEFAULT_TOL
    if m < 1:
        raise InvariantViolation(f"lift multiplicity must be >= 1, got {m}")
    lifted = hermitian(np.kron(np.eye(m), as_operator(a).entries), t)
    if isinstance(a, Projection):
        return Projection(lifted, t)
    if isinstance(a, Effect):
        return Effect(lifted, t)
    return lifted
