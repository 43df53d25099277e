"""Symbolic vectors: finite combinations of basis vectors plus a multiple of
the harmonic vector (the one whose k-th coordinate is 1/k).

For linear-span arithmetic the harmonic vector behaves as an independent
formal coordinate, which is sound because it has infinite support and so
never lies in a finite span of finitely supported vectors.  Inner products,
by contrast, use its concrete pairings: with a basis vector it pairs to the
reciprocal index, with itself to the formal transcendental.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .field import RationalFunction, ZETA, ZERO, scalar

# Coordinate keys order the finite indices first and the harmonic
# coordinate last, which fixes the pivot order of all eliminations.
HARMONIC_KEY = (1, 0)


def _finite_key(index: int) -> tuple[int, int]:
    return (0, index)


class SymbolicVector:
    """Immutable vector with exact scalar coordinates."""

    __slots__ = ("coords", "harmonic")

    def __init__(self,
                 coords: Mapping[int, object] | Iterable[tuple[int, object]] | None = None,
                 harmonic=0):
        items = []
        pairs = coords.items() if isinstance(coords, Mapping) else (coords or ())
        for index, value in pairs:
            index = int(index)
            if index < 1:
                raise ValueError(f"basis indices start at 1, got {index}")
            value = scalar(value)
            if not value.is_zero:
                items.append((index, value))
        items.sort(key=lambda kv: kv[0])
        seen = {k for k, _ in items}
        if len(seen) != len(items):
            raise ValueError("duplicate coordinate index")
        object.__setattr__(self, "coords", tuple(items))
        object.__setattr__(self, "harmonic", scalar(harmonic))

    def __setattr__(self, name, value):
        raise AttributeError("SymbolicVector is immutable")

    @property
    def is_zero(self) -> bool:
        return not self.coords and self.harmonic.is_zero

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.coords)

    def coefficient(self, index: int) -> RationalFunction:
        for k, v in self.coords:
            if k == index:
                return v
        return ZERO

    def coordinate_keys(self) -> list[tuple[int, int]]:
        keys = [_finite_key(k) for k, _ in self.coords]
        if not self.harmonic.is_zero:
            keys.append(HARMONIC_KEY)
        return keys

    def coefficient_at(self, key: tuple[int, int]) -> RationalFunction:
        if key == HARMONIC_KEY:
            return self.harmonic
        return self.coefficient(key[1])

    def leading_key(self) -> tuple[int, int]:
        if self.coords:
            return _finite_key(self.coords[0][0])
        if not self.harmonic.is_zero:
            return HARMONIC_KEY
        raise ValueError("the zero vector has no leading coordinate")

    def scale(self, factor) -> "SymbolicVector":
        factor = scalar(factor)
        return SymbolicVector([(k, v * factor) for k, v in self.coords],
                              self.harmonic * factor)

    def __add__(self, other: "SymbolicVector") -> "SymbolicVector":
        merged = dict(self.coords)
        for k, v in other.coords:
            merged[k] = merged.get(k, ZERO) + v
        return SymbolicVector(merged, self.harmonic + other.harmonic)

    def __sub__(self, other: "SymbolicVector") -> "SymbolicVector":
        return self + other.scale(-1)

    def __neg__(self) -> "SymbolicVector":
        return self.scale(-1)

    def inner(self, other: "SymbolicVector") -> RationalFunction:
        """Exact pairing, bilinear over the scalar field."""
        total = ZERO
        other_coeffs = dict(other.coords)
        for k, v in self.coords:
            w = other_coeffs.get(k)
            if w is not None:
                total = total + v * w
        if not self.harmonic.is_zero:
            for k, w in other.coords:
                total = total + self.harmonic * w * Fraction(1, k)
        if not other.harmonic.is_zero:
            for k, v in self.coords:
                total = total + other.harmonic * v * Fraction(1, k)
        if not self.harmonic.is_zero and not other.harmonic.is_zero:
            total = total + self.harmonic * other.harmonic * ZETA
        return total

    def __eq__(self, other):
        if not isinstance(other, SymbolicVector):
            return NotImplemented
        return self.coords == other.coords and self.harmonic == other.harmonic

    def __hash__(self):
        return hash((self.coords, self.harmonic))

    def __repr__(self):
        parts = [f"{v!r}*e{k}" for k, v in self.coords]
        if not self.harmonic.is_zero:
            parts.append(f"{self.harmonic!r}*x")
        return "SymbolicVector(" + (" + ".join(parts) if parts else "0") + ")"

    def to_json(self) -> dict:
        return {
            "coordinates": [[k, v.to_json()] for k, v in self.coords],
            "harmonic": self.harmonic.to_json(),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SymbolicVector":
        return cls(
            [(int(k), RationalFunction.from_json(v))
             for k, v in obj["coordinates"]],
            RationalFunction.from_json(obj["harmonic"]),
        )


def basis_vector(index: int) -> SymbolicVector:
    return SymbolicVector({index: 1})


def harmonic_vector(coeff=1) -> SymbolicVector:
    return SymbolicVector(None, coeff)


ZERO_VECTOR = SymbolicVector()
