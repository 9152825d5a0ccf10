"""Exact Gaussian rational arithmetic.

Every quantity in this package lives in Q or Q(i).  ``Rat`` is an alias for
:class:`fractions.Fraction`; :class:`GaussRat` is a pair of Fractions treated
as ``re + im*i``.  There are no floats anywhere: all operations are exact and
the JSON forms round-trip losslessly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rat = Fraction

RatLike = Union[int, Fraction]
GaussLike = Union[int, Fraction, "GaussRat"]

__all__ = ["Rat", "GaussRat", "GAUSS_ZERO", "GAUSS_ONE", "GAUSS_I", "as_gauss"]


def _as_rat(value: RatLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an integer or Fraction, got {type(value).__name__}")


@dataclass(frozen=True, slots=True)
class GaussRat:
    """A Gaussian rational ``re + im*i`` with exact Fraction parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", _as_rat(self.re))
        object.__setattr__(self, "im", _as_rat(self.im))

    @staticmethod
    def of(value: GaussLike) -> "GaussRat":
        if isinstance(value, GaussRat):
            return value
        return GaussRat(_as_rat(value))

    @property
    def is_zero(self) -> bool:
        return not self.re and not self.im

    @property
    def is_real(self) -> bool:
        return not self.im

    def real_part(self) -> Fraction:
        """Return ``re`` after checking the value is real."""
        if self.im:
            raise ValueError(f"{self} is not real")
        return self.re

    def conjugate(self) -> "GaussRat":
        return GaussRat(self.re, -self.im)

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __bool__(self) -> bool:
        return not self.is_zero

    def __add__(self, other: GaussLike) -> "GaussRat":
        o = GaussRat.of(other)
        return GaussRat(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: GaussLike) -> "GaussRat":
        o = GaussRat.of(other)
        return GaussRat(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: GaussLike) -> "GaussRat":
        return GaussRat.of(other) - self

    def __neg__(self) -> "GaussRat":
        return GaussRat(-self.re, -self.im)

    def __mul__(self, other: GaussLike) -> "GaussRat":
        o = GaussRat.of(other)
        return GaussRat(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def inverse(self) -> "GaussRat":
        n = self.norm2()
        if not n:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussRat(self.re / n, -self.im / n)

    def __truediv__(self, other: GaussLike) -> "GaussRat":
        return self * GaussRat.of(other).inverse()

    def __rtruediv__(self, other: GaussLike) -> "GaussRat":
        return GaussRat.of(other) * self.inverse()

    def __pow__(self, exponent: int) -> "GaussRat":
        if not isinstance(exponent, int):
            raise TypeError("exponent must be an integer")
        base = self
        if exponent < 0:
            base = self.inverse()
            exponent = -exponent
        result = GAUSS_ONE
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, GaussRat)):
            o = GaussRat.of(other)
            return self.re == o.re and self.im == o.im
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if self.im > 0:
            imag = "i" if self.im == 1 else f"{self.im}*i"
        else:
            imag = "-i" if self.im == -1 else f"{self.im}*i"
        if not self.re:
            return imag
        sign = "+" if self.im > 0 else ""
        return f"{self.re}{sign}{imag}"

    def __repr__(self) -> str:
        return f"GaussRat({self.re!r}, {self.im!r})"

    def to_json(self) -> dict[str, str]:
        return {"re": str(self.re), "im": str(self.im)}

    @staticmethod
    def from_json(data: dict[str, str]) -> "GaussRat":
        return GaussRat(Fraction(data["re"]), Fraction(data["im"]))


GAUSS_ZERO = GaussRat()
GAUSS_ONE = GaussRat(Fraction(1))
GAUSS_I = GaussRat(Fraction(0), Fraction(1))


def as_gauss(value: GaussLike) -> GaussRat:
    """Coerce an int, Fraction, or GaussRat to GaussRat."""
    return GaussRat.of(value)
