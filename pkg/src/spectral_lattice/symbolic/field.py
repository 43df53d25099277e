"""Exact scalars: rational functions of one formal transcendental.

The transcendental stands for the sum of the inverse squares, the only
irrational number the subspace calculus ever meets (as the self pairing of
the harmonic vector).  Keeping it formal keeps every computation exact; the
choice is faithful because that sum is genuinely transcendental.

Polynomials are coefficient tuples of Fractions, constant term first, with
no trailing zeros.  Every rational function is kept in canonical form:
numerator and denominator coprime, denominator monic, zero as () / (1,).
"""

from __future__ import annotations

from fractions import Fraction

_ZERO_POLY: tuple[Fraction, ...] = ()
_ONE_POLY: tuple[Fraction, ...] = (Fraction(1),)


def _trim(coeffs) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _p_add(a, b):
    n = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                 for i in range(n))


def _p_neg(a):
    return tuple(-c for c in a)


def _p_mul(a, b):
    if not a or not b:
        return _ZERO_POLY
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _trim(out)


def _p_divmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    quotient = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    rem = list(a)
    for k in range(len(a) - len(b), -1, -1):
        coeff = rem[k + len(b) - 1] / b[-1]
        quotient[k] = coeff
        if coeff:
            for j, cb in enumerate(b):
                rem[k + j] -= coeff * cb
    return _trim(quotient), _trim(rem)


def _p_monic(a):
    if not a:
        return a
    lead = a[-1]
    return tuple(c / lead for c in a)


def _p_gcd(a, b):
    while b:
        _, r = _p_divmod(a, b)
        a, b = b, r
    return _p_monic(a)


class RationalFunction:
    """An element of the exact scalar field, immutable and hashable."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        n = _coerce_poly(num)
        d = _coerce_poly(den)
        if not d:
            raise ZeroDivisionError("zero denominator")
        if not n:
            d = _ONE_POLY
        else:
            g = _p_gcd(n, d)
            if len(g) > 1 or g[0] != 1:
                n, _ = _p_divmod(n, g)
                d, _ = _p_divmod(d, g)
            lead = d[-1]
            if lead != 1:
                n = tuple(c / lead for c in n)
                d = tuple(c / lead for c in d)
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @property
    def is_zero(self) -> bool:
        return not self.num

    @property
    def is_fraction(self) -> bool:
        """True when the value is a plain rational number."""
        return len(self.num) <= 1 and self.den == _ONE_POLY

    def as_fraction(self) -> Fraction:
        if not self.is_fraction:
            raise ValueError(f"{self!r} is not a plain rational number")
        return self.num[0] if self.num else Fraction(0)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(
            _p_add(_p_mul(self.num, other.den), _p_mul(other.num, self.den)),
            _p_mul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(_p_neg(self.num), self.den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(_p_mul(self.num, other.num),
                                _p_mul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by the zero scalar")
        return RationalFunction(_p_mul(self.num, other.den),
                                _p_mul(self.den, other.num))

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero

    def __repr__(self):
        if self.is_fraction:
            return str(self.as_fraction())
        return f"({_p_str(self.num)})/({_p_str(self.den)})"

    def to_json(self) -> dict:
        return {"num": [str(c) for c in self.num],
                "den": [str(c) for c in self.den]}

    @classmethod
    def from_json(cls, obj: dict) -> "RationalFunction":
        return cls([Fraction(c) for c in obj["num"]],
                   [Fraction(c) for c in obj["den"]])


def _coerce_poly(x) -> tuple[Fraction, ...]:
    if isinstance(x, (int, Fraction)):
        return _trim([Fraction(x)])
    if isinstance(x, (tuple, list)):
        return _trim(x)
    raise TypeError(f"cannot build a polynomial from {type(x).__name__}")


def _coerce(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction)):
        return RationalFunction(x)
    return None


def _p_str(p) -> str:
    if not p:
        return "0"
    parts = []
    for i, c in enumerate(p):
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        elif i == 1:
            parts.append(f"{c}*z")
        else:
            parts.append(f"{c}*z^{i}")
    return " + ".join(parts)


ZERO = RationalFunction(0)
ONE = RationalFunction(1)
ZETA = RationalFunction((0, 1))


def scalar(x) -> RationalFunction:
    """Coerce an int, Fraction or RationalFunction to an exact scalar."""
    out = _coerce(x)
    if out is None:
        raise TypeError(f"cannot coerce {type(x).__name__} to a scalar")
    return out
