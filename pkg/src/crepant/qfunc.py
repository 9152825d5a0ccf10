r"""Exact rational functions of the combined degree variable Q = q*e^x.

Every resolution-side generating function in this package is a Laurent
polynomial in Q divided by a power of (1 - Q).  This module represents such
functions exactly as ``numer / (1-Q)^denom_pow`` with Fraction coefficients,
closed under sum, product, and the logarithmic derivative ``D = Q d/dQ``
(which is d/dx at fixed q).  Because the denominator family is fixed, the
representation stays exact under analytic continuation to Q = -e^(iz), where
1 - Q becomes the invertible series 1 + e^(iz).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Mapping, Union

RatLike = Union[int, Fraction]

__all__ = ["QRational"]


def _clean(numer: Mapping[int, Fraction]) -> dict[int, Fraction]:
    return {j: Fraction(c) for j, c in numer.items() if c}


def _poly_mul(p: Mapping[int, Fraction], q: Mapping[int, Fraction]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for i, ci in p.items():
        for j, cj in q.items():
            out[i + j] = out.get(i + j, Fraction(0)) + ci * cj
    return _clean(out)


def _one_minus_q_power(m: int) -> dict[int, Fraction]:
    return {k: Fraction((-1) ** k * comb(m, k)) for k in range(m + 1)}


@dataclass(frozen=True)
class QRational:
    """Exact Laurent polynomial in Q over a power of (1 - Q)."""

    numer: dict[int, Fraction] = field(default_factory=dict)
    denom_pow: int = 0

    def __post_init__(self) -> None:
        if self.denom_pow < 0:
            raise ValueError("denominator power must be non-negative")
        object.__setattr__(self, "numer", _clean(self.numer))

    # ----------------------------------------------------------- constructors

    @staticmethod
    def zero() -> "QRational":
        return QRational({}, 0)

    @staticmethod
    def one() -> "QRational":
        return QRational({0: Fraction(1)}, 0)

    @staticmethod
    def monomial(power: int, coeff: RatLike = 1) -> "QRational":
        return QRational({power: Fraction(coeff)}, 0)

    @staticmethod
    def geometric_core(d: int) -> "QRational":
        """Q^d / (1-Q)^(2d), the degree-d edge-class building block."""
        if d < 1:
            raise ValueError("degree must be >= 1")
        return QRational({d: Fraction(1)}, 2 * d)

    # -------------------------------------------------------------- structure

    @property
    def is_zero(self) -> bool:
        return not self.numer

    def min_power(self) -> int:
        if self.is_zero:
            raise ValueError("zero has no minimal power")
        return min(self.numer)

    def reduced(self) -> "QRational":
        """Cancel common (1 - Q) factors between numerator and denominator."""
        numer, m = dict(self.numer), self.denom_pow
        while m > 0 and numer and sum(numer.values()) == 0:
            # p(1) = 0, so p(Q) = (1 - Q) s(Q) with s_j = p_j + s_{j-1}
            lo, hi = min(numer), max(numer)
            quotient: dict[int, Fraction] = {}
            prev = Fraction(0)
            for j in range(lo, hi):
                prev = numer.get(j, Fraction(0)) + prev
                if prev:
                    quotient[j] = prev
            numer = quotient
            m -= 1
        return QRational(numer, m)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QRational):
            return NotImplemented
        left = _poly_mul(self.numer, _one_minus_q_power(other.denom_pow))
        right = _poly_mul(other.numer, _one_minus_q_power(self.denom_pow))
        return left == right

    def __hash__(self) -> int:
        reduced = self.reduced()
        return hash((tuple(sorted(reduced.numer.items())), reduced.denom_pow))

    # ------------------------------------------------------------- arithmetic

    def __add__(self, other: "QRational") -> "QRational":
        m = max(self.denom_pow, other.denom_pow)
        left = _poly_mul(self.numer, _one_minus_q_power(m - self.denom_pow))
        right = _poly_mul(other.numer, _one_minus_q_power(m - other.denom_pow))
        out = dict(left)
        for j, c in right.items():
            out[j] = out.get(j, Fraction(0)) + c
        return QRational(out, m)

    def __neg__(self) -> "QRational":
        return QRational({j: -c for j, c in self.numer.items()}, self.denom_pow)

    def __sub__(self, other: "QRational") -> "QRational":
        return self + (-other)

    def __mul__(self, other: "QRational | RatLike") -> "QRational":
        if isinstance(other, QRational):
            return QRational(_poly_mul(self.numer, other.numer), self.denom_pow + other.denom_pow)
        c = Fraction(other)
        return QRational({j: ci * c for j, ci in self.numer.items()}, self.denom_pow)

    __rmul__ = __mul__

    def shifted(self, power: int) -> "QRational":
        """Multiply by Q^power (power may be negative)."""
        return QRational({j + power: c for j, c in self.numer.items()}, self.denom_pow)

    def x_derivative(self) -> "QRational":
        """Apply D = Q d/dQ, the derivative in x at fixed q when Q = q e^x."""
        m = self.denom_pow
        # D(p/(1-Q)^m) = [ (1-Q) Dp + m Q p ] / (1-Q)^(m+1)
        dp = {j: c * j for j, c in self.numer.items() if j}
        term1 = _poly_mul(dp, _one_minus_q_power(1))
        term2 = {j + 1: c * m for j, c in self.numer.items()}
        out = dict(term1)
        for j, c in term2.items():
            out[j] = out.get(j, Fraction(0)) + c
        return QRational(out, m + 1)

    def x_derivative_iter(self, times: int) -> "QRational":
        result = self
        for _ in range(times):
            result = result.x_derivative()
        return result

    # -------------------------------------------------------------- expansion

    def expand(self, qmax: int) -> dict[int, Fraction]:
        """Power-series coefficients of Q^j for j <= qmax (Laurent-aware)."""
        out: dict[int, Fraction] = {}
        m = self.denom_pow
        for j, c in self.numer.items():
            k = 0
            while j + k <= qmax:
                weight = Fraction(comb(m - 1 + k, k)) if m else (Fraction(1) if k == 0 else None)
                if weight is None:
                    break
                coeff = c * weight
                if coeff:
                    out[j + k] = out.get(j + k, Fraction(0)) + coeff
                k += 1
        return {j: c for j, c in out.items() if c}

    def expand_x_antiderivative(self, qmax: int) -> dict[int, Fraction]:
        """Expansion of the x-antiderivative (inverse of :meth:`x_derivative`).

        Each Q^j coefficient is divided by j; a Q^0 term has no antiderivative
        in this family and raises.  The integration constant is zero, i.e. the
        result vanishes as x -> -infinity at fixed |q| < 1.
        """
        expansion = self.expand(qmax)
        if 0 in expansion:
            raise ValueError("x-antiderivative requires no Q^0 term")
        return {j: c / j for j, c in expansion.items()}

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = " + ".join(f"({c})*Q^{j}" for j, c in sorted(self.numer.items()))
        if self.denom_pow:
            return f"[{terms}] / (1-Q)^{self.denom_pow}"
        return terms
