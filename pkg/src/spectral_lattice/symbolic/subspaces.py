"""Exact subspaces: finite spans and orthogonal complements of finite spans.

The class of these two shapes is closed under meet, join and complement,
and containment and equality are decided exactly.  Every subspace stores a
canonical reduced-echelon basis, so two equal subspaces have identical
representations.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .field import RationalFunction, ZERO, ONE
from .vectors import SymbolicVector

FINITE_SPAN = "span"
COFINITE_COMPLEMENT = "complement"


def _reduce(v: SymbolicVector,
            basis: Sequence[SymbolicVector]) -> SymbolicVector:
    # Basis rows are pivot-normalized with strictly increasing pivots.
    for b in basis:
        c = v.coefficient_at(b.leading_key())
        if not c.is_zero:
            v = v - b.scale(c)
    return v


def _canonical_basis(vectors: Iterable[SymbolicVector]) -> tuple[SymbolicVector, ...]:
    """Reduced echelon basis of the span; unique for a given subspace."""
    basis: list[SymbolicVector] = []
    for v in vectors:
        v = _reduce(v, basis)
        if v.is_zero:
            continue
        pivot = v.leading_key()
        v = v.scale(ONE / v.coefficient_at(pivot))
        basis = [b - v.scale(b.coefficient_at(pivot)) for b in basis]
        basis.append(v)
        basis.sort(key=lambda b: b.leading_key())
    return tuple(basis)


def _nullspace(rows: Sequence[Sequence[RationalFunction]],
               ncols: int) -> list[list[RationalFunction]]:
    """Basis of the solution space of a homogeneous system, exact."""
    matrix = [list(row) for row in rows]
    pivots: list[tuple[int, int]] = []  # (row, col)
    row = 0
    for col in range(ncols):
        pivot_row = next((r for r in range(row, len(matrix))
                          if not matrix[r][col].is_zero), None)
        if pivot_row is None:
            continue
        matrix[row], matrix[pivot_row] = matrix[pivot_row], matrix[row]
        inv = ONE / matrix[row][col]
        matrix[row] = [c * inv for c in matrix[row]]
        for r in range(len(matrix)):
            if r != row and not matrix[r][col].is_zero:
                factor = matrix[r][col]
                matrix[r] = [c - factor * p
                             for c, p in zip(matrix[r], matrix[row])]
        pivots.append((row, col))
        row += 1
        if row == len(matrix):
            break
    pivot_cols = {col for _, col in pivots}
    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        vec = [ZERO] * ncols
        vec[free] = ONE
        for r, col in pivots:
            vec[col] = -matrix[r][free]
        basis.append(vec)
    return basis


class SymbolicSubspace:
    """A finite span or the orthogonal complement of one."""

    __slots__ = ("kind", "generators")

    def __init__(self, kind: str,
                 generators: Iterable[SymbolicVector] = ()):
        if kind not in (FINITE_SPAN, COFINITE_COMPLEMENT):
            raise ValueError(f"unknown subspace kind {kind!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "generators", _canonical_basis(generators))

    def __setattr__(self, name, value):
        raise AttributeError("SymbolicSubspace is immutable")

    @property
    def is_zero(self) -> bool:
        return self.kind == FINITE_SPAN and not self.generators

    @property
    def is_full(self) -> bool:
        return self.kind == COFINITE_COMPLEMENT and not self.generators

    @property
    def dim(self) -> int | None:
        """Dimension for spans, None for (infinite-dimensional) complements."""
        return len(self.generators) if self.kind == FINITE_SPAN else None

    @property
    def codim(self) -> int | None:
        return len(self.generators) if self.kind == COFINITE_COMPLEMENT else None

    def __eq__(self, other):
        if not isinstance(other, SymbolicSubspace):
            return NotImplemented
        return self.kind == other.kind and self.generators == other.generators

    def __hash__(self):
        return hash((self.kind, self.generators))

    def __repr__(self):
        if self.is_zero:
            return "SymbolicSubspace(0)"
        if self.is_full:
            return "SymbolicSubspace(I)"
        return f"SymbolicSubspace({self.kind}, {len(self.generators)} generators)"

    def to_json(self) -> dict:
        return {"kind": self.kind,
                "generators": [g.to_json() for g in self.generators]}

    @classmethod
    def from_json(cls, obj: dict) -> "SymbolicSubspace":
        return cls(obj["kind"],
                   [SymbolicVector.from_json(g) for g in obj["generators"]])


def span_of(vectors: Iterable[SymbolicVector]) -> SymbolicSubspace:
    return SymbolicSubspace(FINITE_SPAN, vectors)


def zero_subspace() -> SymbolicSubspace:
    return SymbolicSubspace(FINITE_SPAN, ())


def full_space() -> SymbolicSubspace:
    return SymbolicSubspace(COFINITE_COMPLEMENT, ())


def sym_complement(s: SymbolicSubspace) -> SymbolicSubspace:
    """Orthogonal complement; an involution on this class."""
    if s.kind == FINITE_SPAN:
        return SymbolicSubspace(COFINITE_COMPLEMENT, s.generators)
    return SymbolicSubspace(FINITE_SPAN, s.generators)


def contains(s: SymbolicSubspace, v: SymbolicVector) -> bool:
    """Exact membership decision."""
    if s.kind == FINITE_SPAN:
        return _reduce(v, s.generators).is_zero
    return all(v.inner(g).is_zero for g in s.generators)


def _intersect_spans(s: SymbolicSubspace,
                     t: SymbolicSubspace) -> SymbolicSubspace:
    sg, tg = s.generators, t.generators
    if not sg or not tg:
        return zero_subspace()
    keys = sorted({k for g in sg + tg for k in g.coordinate_keys()})
    rows = [[g.coefficient_at(key) for g in sg]
            + [-h.coefficient_at(key) for h in tg]
            for key in keys]
    combos = _nullspace(rows, len(sg) + len(tg))
    vectors = []
    for combo in combos:
        w = SymbolicVector()
        for c, g in zip(combo[:len(sg)], sg):
            if not c.is_zero:
                w = w + g.scale(c)
        vectors.append(w)
    return span_of(vectors)


def _span_meet_complement(s: SymbolicSubspace,
                          t: SymbolicSubspace) -> SymbolicSubspace:
    # Vectors of the span that pair to zero with every generator of the
    # complemented span.  The pairings may involve the transcendental, so
    # the system is solved over the full scalar field.
    sg = s.generators
    if not sg:
        return zero_subspace()
    gg = t.generators
    if not gg:
        return s
    rows = [[v.inner(g) for v in sg] for g in gg]
    combos = _nullspace(rows, len(sg))
    vectors = []
    for combo in combos:
        w = SymbolicVector()
        for c, v in zip(combo, sg):
            if not c.is_zero:
                w = w + v.scale(c)
        vectors.append(w)
    return span_of(vectors)


def sym_meet(s: SymbolicSubspace, t: SymbolicSubspace) -> SymbolicSubspace:
    """Exact intersection; closed on the span/complement class."""
    if s.kind == FINITE_SPAN and t.kind == FINITE_SPAN:
        return _intersect_spans(s, t)
    if s.kind == FINITE_SPAN:
        return _span_meet_complement(s, t)
    if t.kind == FINITE_SPAN:
        return _span_meet_complement(t, s)
    return SymbolicSubspace(COFINITE_COMPLEMENT, s.generators + t.generators)


def sym_join(s: SymbolicSubspace, t: SymbolicSubspace) -> SymbolicSubspace:
    """Closed linear hull of the union, via the complement of the meet of
    the complements."""
    return sym_complement(sym_meet(sym_complement(s), sym_complement(t)))


def sym_leq(s: SymbolicSubspace, t: SymbolicSubspace) -> bool:
    """Exact containment decision."""
    if s.kind == FINITE_SPAN:
        return all(contains(t, g) for g in s.generators)
    if t.kind == COFINITE_COMPLEMENT:
        # Complements compare opposite to their defining spans.
        return sym_leq(span_of(t.generators), span_of(s.generators))
    # A complement has finite codimension, hence infinite dimension, and
    # can never fit inside a finite span.
    return False
