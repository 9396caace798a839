"""Exact Gaussian-rational scalars.

A GaussianRational is a complex number a + b*i with a, b arbitrary-precision
rationals (``fractions.Fraction``).  All arithmetic is exact; equality is
structural equality of the reduced fractions.  These scalars carry every
symbolic coefficient in the package; floating point only ever appears in
numerical evaluation and quadrature.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError

RationalLike = "Fraction | int"


@dataclass(frozen=True)
class GaussianRational:
    """a + b*i with exact rational a, b."""

    re: Fraction
    im: Fraction

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: GaussianRational) -> GaussianRational:
        other = _coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: GaussianRational) -> GaussianRational:
        other = _coerce(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> GaussianRational:
        return _coerce(other) - self

    def __mul__(self, other: GaussianRational) -> GaussianRational:
        other = _coerce(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: GaussianRational) -> GaussianRational:
        other = _coerce(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other) -> GaussianRational:
        return _coerce(other) / self

    def __neg__(self) -> GaussianRational:
        return GaussianRational(-self.re, -self.im)

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """|self|^2 as an exact rational."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> GaussianRational:
        return GaussianRational(1) / self

    # -- predicates and conversions --------------------------------------

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        return f"({self.re}+{self.im}i)"

    __repr__ = __str__

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {"re": str(self.re), "im": str(self.im)}

    @classmethod
    def from_json(cls, obj) -> GaussianRational:
        if not isinstance(obj, dict) or "re" not in obj or "im" not in obj:
            raise ParseError(f"expected {{'re', 'im'}} object, got {obj!r}")
        return cls(parse_rational(obj["re"]), parse_rational(obj["im"]))


def parse_rational(s) -> Fraction:
    """Parse a 'num/den' (or plain integer) string into a Fraction."""
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError, TypeError) as e:
        raise ParseError(f"invalid rational string {s!r}") from e


def _coerce(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to GaussianRational")


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
