"""Complex Hermitian matrix arithmetic and the lattice of orthogonal projections.

Everything downstream (spectral families, the spectral order, complements)
builds on the primitives here: tolerance-checked wrapper types, the usual
(Loewner) comparison, and meet / join / order on projections.  All values are
immutable and all functions are pure, so concurrent use is unrestricted.
"""

from __future__ import annotations

from dataclasses import dataclass, InitVar, replace
from typing import Union

import numpy as np


class DimensionMismatch(ValueError):
    """Raised when two operators of different dimension are combined."""


class InvariantViolation(ValueError):
    """Raised when a value fails the invariants of its type."""


@dataclass(frozen=True)
class Tolerances:
    """Numerical tolerances used throughout the package.

    ``cluster_tol`` and ``bp_tol`` are applied relative to the scale
    ``max(1, norm)`` of the operator at hand; the others are absolute.
    """

    herm_tol: float = 1e-10
    proj_tol: float = 1e-9
    psd_tol: float = 1e-9
    rank_tol: float = 1e-8
    cluster_tol: float = 1e-9
    recon_tol: float = 1e-8
    bp_tol: float = 1e-9

    def __post_init__(self):
        for name in ("herm_tol", "proj_tol", "psd_tol", "rank_tol",
                     "cluster_tol", "recon_tol", "bp_tol"):
            if getattr(self, name) <= 0.0:
                raise InvariantViolation(f"tolerance {name} must be positive")

    def scaled(self, factor: float) -> "Tolerances":
        """Return a copy with every tolerance multiplied by ``factor``."""
        if factor <= 0.0:
            raise InvariantViolation("tolerance scale factor must be positive")
        return replace(
            self,
            **{name: getattr(self, name) * factor
               for name in ("herm_tol", "proj_tol", "psd_tol", "rank_tol",
                            "cluster_tol", "recon_tol", "bp_tol")},
        )


DEFAULT_TOL = Tolerances()


def _as_square_complex(entries) -> np.ndarray:
    arr = np.array(entries, dtype=np.complex128, copy=True)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise InvariantViolation(f"expected a square matrix, got shape {arr.shape}")
    if arr.shape[0] < 1:
        raise InvariantViolation("dimension must be at least 1")
    return arr


@dataclass(frozen=True, eq=False)
class HermitianOperator:
    """A dense complex n-by-n matrix A with A equal to its adjoint.

    Real symmetric input is accepted and promoted to complex.  The entries
    array is copied and frozen at construction.
    """

    entries: np.ndarray
    tol: InitVar[Tolerances | None] = None

    def __post_init__(self, tol):
        t = tol or DEFAULT_TOL
        arr = _as_square_complex(self.entries)
        scale = max(1.0, float(np.linalg.norm(arr)))
        residual = float(np.linalg.norm(arr - arr.conj().T))
        if residual > t.herm_tol * scale:
            raise InvariantViolation(
                f"matrix is not hermitian: residual {residual:.3e} exceeds "
                f"{t.herm_tol * scale:.3e}")
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def norm(self) -> float:
        """Frobenius norm."""
        return float(np.linalg.norm(self.entries))

    def __add__(self, other: "HermitianOperator") -> "HermitianOperator":
        other = as_operator(other)
        _require_same_dim(self, other)
        return HermitianOperator(self.entries + other.entries)

    def __sub__(self, other: "HermitianOperator") -> "HermitianOperator":
        other = as_operator(other)
        _require_same_dim(self, other)
        return HermitianOperator(self.entries - other.entries)

    def __neg__(self) -> "HermitianOperator":
        return HermitianOperator(-self.entries)

    def __mul__(self, scalar) -> "HermitianOperator":
        if not isinstance(scalar, (int, float)):
            return NotImplemented
        return HermitianOperator(self.entries * float(scalar))

    __rmul__ = __mul__

    def __repr__(self):
        return f"HermitianOperator(dim={self.dim})"


@dataclass(frozen=True, eq=False)
class Projection:
    """An idempotent HermitianOperator.

    The constructor checks the idempotency residual; since |t^2 - t| bounds
    the distance of any eigenvalue t to {0, 1}, a small residual also pins
    the spectrum near {0, 1}.
    """

    underlying: HermitianOperator
    tol: InitVar[Tolerances | None] = None

    def __post_init__(self, tol):
        t = tol or DEFAULT_TOL
        arr = self.underlying.entries
        residual = float(np.linalg.norm(arr @ arr - arr))
        if residual > t.proj_tol:
            raise InvariantViolation(
                f"matrix is not idempotent: residual {residual:.3e}")

    @property
    def entries(self) -> np.ndarray:
        return self.underlying.entries

    @property
    def dim(self) -> int:
        return self.underlying.dim

    @property
    def rank(self) -> int:
        return int(round(float(np.trace(self.entries).real)))

    def complement(self) -> "Projection":
        """The orthogonal complement I - P."""
        return Projection(identity(self.dim) - self.underlying)

    def as_effect(self) -> "Effect":
        return Effect(self.underlying)

    def __repr__(self):
        return f"Projection(dim={self.dim}, rank={self.rank})"


@dataclass(frozen=True, eq=False)
class Effect:
    """A HermitianOperator A with 0 <= A <= I (within psd_tol)."""

    underlying: HermitianOperator
    tol: InitVar[Tolerances | None] = None

    def __post_init__(self, tol):
        t = tol or DEFAULT_TOL
        eigs = np.linalg.eigvalsh(self.underlying.entries)
        if eigs[0] < -t.psd_tol or eigs[-1] > 1.0 + t.psd_tol:
            raise InvariantViolation(
                f"eigenvalues [{eigs[0]:.3e}, {eigs[-1]:.3e}] are not within "
                f"psd_tol of [0, 1]")

    @property
    def entries(self) -> np.ndarray:
        return self.underlying.entries

    @property
    def dim(self) -> int:
        return self.underlying.dim

    def __repr__(self):
        return f"Effect(dim={self.dim})"


OperatorLike = Union[HermitianOperator, Projection, Effect]


@dataclass(frozen=True)
class SpectralBounds:
    """The smallest closed interval [m, M] containing the spectrum."""

    m: float
    M: float

    def __post_init__(self):
        if self.m > self.M:
            raise InvariantViolation(f"m={self.m} exceeds M={self.M}")


def as_operator(x: OperatorLike) -> HermitianOperator:
    """Unwrap projections and effects to the underlying operator."""
    if isinstance(x, HermitianOperator):
        return x
    if isinstance(x, (Projection, Effect)):
        return x.underlying
    raise TypeError(f"expected an operator-like value, got {type(x).__name__}")


def _require_same_dim(a, b) -> None:
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimensions differ: {a.dim} vs {b.dim}")


def hermitian(entries, tol: Tolerances | None = None) -> HermitianOperator:
    return HermitianOperator(entries, tol)


def projection(entries, tol: Tolerances | None = None) -> Projection:
    return Projection(HermitianOperator(entries, tol), tol)


def effect(entries, tol: Tolerances | None = None) -> Effect:
    return Effect(HermitianOperator(entries, tol), tol)


def identity(dim: int) -> HermitianOperator:
    return HermitianOperator(np.eye(dim, dtype=np.complex128))


def zero(dim: int) -> HermitianOperator:
    return HermitianOperator(np.zeros((dim, dim), dtype=np.complex128))


def identity_projection(dim: int) -> Projection:
    return Projection(identity(dim))


def zero_projection(dim: int) -> Projection:
    return Projection(zero(dim))


def projection_from_frame(columns: np.ndarray,
                          tol: Tolerances | None = None) -> Projection:
    """Orthogonal projection onto the column span of ``columns``.

    The columns are orthonormalized first, dropping directions whose
    singular value falls below rank_tol, so rank-deficient frames are fine.
    """
    t = tol or DEFAULT_TOL
    cols = np.atleast_2d(np.asarray(columns, dtype=np.complex128))
    if cols.ndim != 2:
        raise InvariantViolation("frame must be a 2d array of column vectors")
    u, s, _ = np.linalg.svd(cols, full_matrices=False)
    basis = u[:, s > t.rank_tol]
    return projection(basis @ basis.conj().T, t)


def leq_usual(a: OperatorLike, b: OperatorLike,
              tol: Tolerances | None = None) -> bool:
    """The usual (Loewner) order: b - a is positive semidefinite."""
    t = tol or DEFAULT_TOL
    a, b = as_operator(a), as_operator(b)
    _require_same_dim(a, b)
    eigs = np.linalg.eigvalsh(b.entries - a.entries)
    return bool(eigs[0] >= -t.psd_tol)


def leq_proj(p: Projection, q: Projection,
             tol: Tolerances | None = None) -> bool:
    """Order on projections: range(p) contained in range(q), i.e. qp = p."""
    t = tol or DEFAULT_TOL
    _require_same_dim(p, q)
    return bool(np.linalg.norm(q.entries @ p.entries - p.entries) <= t.proj_tol)


def proj_meet(p: Projection, q: Projection,
              tol: Tolerances | None = None) -> Projection:
    """Projection onto range(p) intersected with range(q).

    Computed as the projection onto the kernel of (I - p) + (I - q): a
    vector lies in both ranges exactly when that positive sum annihilates
    it.  One eigendecomposition, no iteration.
    """
    t = tol or DEFAULT_TOL
    _require_same_dim(p, q)
    s = (np.eye(p.dim) - p.entries) + (np.eye(q.dim) - q.entries)
    eigvals, eigvecs = np.linalg.eigh(s)
    kernel = eigvecs[:, eigvals < t.rank_tol]
    return projection(kernel @ kernel.conj().T, t)


def proj_join(p: Projection, q: Projection,
              tol: Tolerances | None = None) -> Projection:
    """Projection onto range(p) + range(q), via I - ((I-p) meet (I-q))."""
    t = tol or DEFAULT_TOL
    _require_same_dim(p, q)
    return proj_meet(p.complement(), q.complement(), t).complement()


def spectral_bounds(a: OperatorLike) -> SpectralBounds:
    """Smallest compact interval containing the spectrum."""
    eigs = np.linalg.eigvalsh(as_operator(a).entries)
    return SpectralBounds(float(eigs[0]), float(eigs[-1]))


def matrix_to_json(a: OperatorLike) -> dict:
    """Matrix JSON format used repo-wide: row-major [re, im] pairs."""
    arr = as_operator(a).entries
    return {
        "dim": arr.shape[0],
        "entries": [[[float(z.real), float(z.imag)] for z in row]
                    for row in arr],
    }


def matrix_from_json(obj: dict, tol: Tolerances | None = None) -> HermitianOperator:
    dim = int(obj["dim"])
    rows = obj["entries"]
    if len(rows) != dim or any(len(r) != dim for r in rows):
        raise InvariantViolation("matrix JSON entries do not match dim")
    arr = np.array([[complex(re, im) for re, im in row] for row in rows],
                   dtype=np.complex128)
    return HermitianOperator(arr, tol)
