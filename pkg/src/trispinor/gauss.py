"""Gaussian rationals: complex numbers with exact rational parts."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction | int


@dataclass(frozen=True, eq=False)
class GaussScalar:
    """Complex scalar whose real and imaginary parts are exact rationals.

    Supports +, -, *, / and conjugation; equality is exact and also accepts
    plain ints/Fractions (treated as purely real).
    """

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    def __add__(self, other: GaussScalar | Rational):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussScalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: GaussScalar | Rational):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussScalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: GaussScalar | Rational):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self) -> GaussScalar:
        return GaussScalar(-self.re, -self.im)

    def __mul__(self, other: GaussScalar | Rational):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussScalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: GaussScalar | Rational):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        d = other.re * other.re + other.im * other.im
        if d == 0:
            raise ZeroDivisionError("division by zero")
        return GaussScalar(
            (self.re * other.re + self.im * other.im) / d,
            (self.im * other.re - self.re * other.im) / d,
        )

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = GaussScalar(other)
        if not isinstance(other, GaussScalar):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def conjugate(self) -> GaussScalar:
        return GaussScalar(self.re, -self.im)

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def __repr__(self) -> str:
        return f"GaussScalar({self.re}, {self.im})"


def _coerce(value: object) -> GaussScalar | None:
    if isinstance(value, GaussScalar):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussScalar(Fraction(value))
    return None


def as_gauss(value: GaussScalar | Rational) -> GaussScalar:
    """Coerce an int or Fraction to a purely real GaussScalar."""
    coerced = _coerce(value)
    if coerced is None:
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")
    return coerced


ZERO = GaussScalar(0)
ONE = GaussScalar(1)
I = GaussScalar(0, 1)
