"""Step spectral families: the resolution of a Hermitian matrix into a
right-continuous increasing projection-valued step function, and back.

In finite dimension a spectral family is exactly a finite step function, so
the spectral theorem reduces to one eigendecomposition and no quadrature is
needed anywhere.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, InitVar
from typing import Iterable, Sequence

import numpy as np

from .linalg import (
    DEFAULT_TOL,
    HermitianOperator,
    InvariantViolation,
    OperatorLike,
    Projection,
    Tolerances,
    as_operator,
    hermitian,
    identity_projection,
    leq_proj,
    projection,
    spectral_bounds,
    zero_projection,
    matrix_to_json,
    matrix_from_json,
)


@dataclass(frozen=True, eq=False)
class StepSpectralFamily:
    """A finite right-continuous increasing projection-valued step function.

    The value is 0 below the first breakpoint, ``cumulatives[i]`` on
    [breakpoints[i], breakpoints[i+1]), and I from the last breakpoint on.
    Right-continuity holds by construction of this representation.
    """

    dim: int
    breakpoints: tuple[float, ...]
    cumulatives: tuple[Projection, ...]
    tol: InitVar[Tolerances | None] = None

    def __post_init__(self, tol):
        t = tol or DEFAULT_TOL
        bps = tuple(float(b) for b in self.breakpoints)
        cums = tuple(self.cumulatives)
        if len(bps) == 0 or len(bps) != len(cums):
            raise InvariantViolation("need matching, nonempty breakpoint and "
                                     "cumulative lists")
        if any(q.dim != self.dim for q in cums):
            raise InvariantViolation("cumulative dimension mismatch")
        scale = max(1.0, max(abs(b) for b in bps))
        for lo, hi in zip(bps, bps[1:]):
            if hi - lo <= t.cluster_tol * scale:
                raise InvariantViolation(
                    f"breakpoints {lo} and {hi} are not separated")
        for q, r in zip(cums, cums[1:]):
            if not leq_proj(q, r, t):
                raise InvariantViolation("cumulatives are not increasing")
        top = cums[-1].entries
        if np.linalg.norm(top - np.eye(self.dim)) > t.proj_tol * self.dim:
            raise InvariantViolation("last cumulative is not the identity")
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "cumulatives", cums)

    def __repr__(self):
        return (f"StepSpectralFamily(dim={self.dim}, "
                f"breakpoints={list(self.breakpoints)})")


def _cluster_sorted(values: Sequence[float], width: float) -> list[list[int]]:
    """Greedy chain clustering of sorted values; gaps > width split."""
    groups: list[list[int]] = []
    for i, v in enumerate(values):
        if groups and v - values[groups[-1][-1]] <= width:
            groups[-1].append(i)
        else:
            groups.append([i])
    return groups


def spectral_family_of(a: OperatorLike,
                       tol: Tolerances | None = None) -> StepSpectralFamily:
    """The spectral family of a Hermitian matrix.

    Breakpoints are the eigenvalues, merged when closer than
    cluster_tol * max(1, norm); the cumulative at each breakpoint projects
    onto the span of all eigenvectors up to it.  Raises
    ``numpy.linalg.LinAlgError`` if the eigendecomposition fails, which
    signals numerically pathological input.
    """
    t = tol or DEFAULT_TOL
    op = as_operator(a)
    eigvals, eigvecs = np.linalg.eigh(op.entries)
    width = t.cluster_tol * max(1.0, float(np.linalg.norm(op.entries)))
    groups = _cluster_sorted([float(v) for v in eigvals], width)
    breakpoints = []
    cumulatives = []
    for group in groups:
        breakpoints.append(float(np.mean(eigvals[group])))
        upto = group[-1] + 1
        basis = eigvecs[:, :upto]
        cumulatives.append(projection(basis @ basis.conj().T, t))
    return StepSpectralFamily(op.dim, tuple(breakpoints), tuple(cumulatives), t)


def eval_at(family: StepSpectralFamily, lam: float) -> Projection:
    """The step-function value at ``lam`` (right-continuous)."""
    idx = bisect.bisect_right(family.breakpoints, lam) - 1
    if idx < 0:
        return zero_projection(family.dim)
    return family.cumulatives[idx]


def left_limit(family: StepSpectralFamily, lam: float) -> Projection:
    """Supremum of the family values strictly below ``lam``.

    Equals ``eval_at`` away from breakpoints; at a breakpoint it is the
    previous cumulative.
    """
    idx = bisect.bisect_left(family.breakpoints, lam) - 1
    if idx < 0:
        return zero_projection(family.dim)
    return family.cumulatives[idx]


def reconstruct(family: StepSpectralFamily,
                tol: Tolerances | None = None) -> HermitianOperator:
    """Finite Stieltjes sum: sum of breakpoint * (Q_i - Q_{i-1})."""
    acc = np.zeros((family.dim, family.dim), dtype=np.complex128)
    prev = np.zeros_like(acc)
    for lam, q in zip(family.breakpoints, family.cumulatives):
        acc += lam * (q.entries - prev)
        prev = q.entries
    acc = (acc + acc.conj().T) / 2.0
    return hermitian(acc, tol)


def affine_transform(family: StepSpectralFamily, a: float, b: float,
                     tol: Tolerances | None = None) -> StepSpectralFamily:
    """The family of a*A + b*I given the family of A, for a > 0.

    Breakpoints map to a * breakpoint + b; cumulatives are unchanged.
    """
    if a <= 0:
        raise InvariantViolation(f"affine scale must be positive, got {a}")
    return StepSpectralFamily(
        family.dim,
        tuple(a * lam + b for lam in family.breakpoints),
        family.cumulatives,
        tol or DEFAULT_TOL,
    )


def indicator_above(a: OperatorLike, lam: float,
                    tol: Tolerances | None = None) -> Projection:
    """Spectral projection onto the part of the spectrum above ``lam``.

    For an effect and a unit vector x, the expectation of this projection
    in x is the probability that a measurement yields a value in (lam, 1].
    """
    t = tol or DEFAULT_TOL
    return eval_at(spectral_family_of(a, t), lam).complement()


def merged_breakpoints(families: Iterable[StepSpectralFamily],
                       tol: Tolerances | None = None) -> list[float]:
    """Sorted union of breakpoints, deduplicated within bp_tol.

    Each cluster of nearly coincident breakpoints is represented by its
    maximum, so evaluating any of the input families at a representative
    picks up all jumps of the cluster.  Independently computed families
    carry eigenvalue jitter well below bp_tol, which this absorbs.
    """
    t = tol or DEFAULT_TOL
    pts = sorted(b for f in families for b in f.breakpoints)
    if not pts:
        return []
    width = t.bp_tol * max(1.0, max(abs(p) for p in pts))
    return [pts[g[-1]] for g in _cluster_sorted(pts, width)]


def family_to_json(family: StepSpectralFamily) -> dict:
    return {
        "dim": family.dim,
        "pieces": [
            {"lambda": lam, "cumulative": matrix_to_json(q)}
            for lam, q in zip(family.breakpoints, family.cumulatives)
        ],
    }


def family_from_json(obj: dict,
                     tol: Tolerances | None = None) -> StepSpectralFamily:
    t = tol or DEFAULT_TOL
    pieces = obj["pieces"]
    return StepSpectralFamily(
        int(obj["dim"]),
        tuple(float(p["lambda"]) for p in pieces),
        tuple(Projection(matrix_from_json(p["cumulative"], t), t)
              for p in pieces),
        t,
    )


def rescale_to_effect(a: OperatorLike, tol: Tolerances | None = None):
    """Affine rescale of a Hermitian matrix into [0, I].

    Maps [m, M] onto [0, 1]; a scalar matrix (m = M) maps to I/2.  Returns
    the rescaled operator together with the (scale, offset) pair applied.
    """
    from .linalg import Effect, identity  # local to avoid cycle at import

    t = tol or DEFAULT_TOL
    op = as_operator(a)
    bounds = spectral_bounds(op)
    span = bounds.M - bounds.m
    if span < 1e-12:
        dim = op.dim
        return Effect(0.5 * identity(dim), t), (0.0, 0.5)
    scale = 1.0 / span
    offset = -bounds.m / span
    rescaled = scale * op + offset * identity(op.dim)
    return Effect(rescaled, t), (scale, offset)
