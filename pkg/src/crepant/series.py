r"""Truncated multivariate formal power series over the Gaussian rationals.

A series is a finite dictionary mapping monomials to :class:`~crepant.gauss.GaussRat`
coefficients, truncated against a :class:`Caps` bound.  Three kinds of variable
occur:

* one *analytic* variable (``z`` or ``x``), the only variable that is ever
  differentiated or integrated; its exponent is bounded by ``caps.order``
  (exclusive, so ``order = 9`` keeps powers up to ``z^8``),
* *winding* variables, one per (side, winding) pair, tracking boundary
  components of maps; the total winding weight ``sum(d_i * e_i)`` is bounded by
  ``caps.max_winding`` and the boundary count ``sum(e_i)`` by
  ``caps.max_boundary``,
* *degree* variables (``q``, ``P``, ``U``, ``W``), each with exponent bounded by
  ``caps.max_degree``.

Truncation is monotone: every operation truncates its result, so any sequence
of operations agrees with computing exactly and truncating once at the end.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable, Iterator, Mapping, Union

from .gauss import GAUSS_I, GAUSS_ONE, GAUSS_ZERO, GaussRat, as_gauss

__all__ = [
    "VarId",
    "Monomial",
    "MONOMIAL_ONE",
    "Caps",
    "TruncSeries",
    "SeriesError",
    "NonUnitConstant",
    "exp_i_analytic",
    "cos_half",
    "sec_even_power",
    "tan_half",
    "log_sec_half",
]

Scalar = Union[int, Fraction, GaussRat]

_WINDING_PREFIX = {
    "top": "yt",
    "bottom": "yb",
    "orbifold": "w",
    "orbifold-tilde": "wt",
}
_KIND_RANK = {"analytic": 0, "degree": 1, "winding": 2}


class SeriesError(Exception):
    """Base class for series arithmetic failures."""


class NonUnitConstant(SeriesError):
    """Raised when inverting a series whose constant term is zero."""


@dataclass(frozen=True, slots=True)
class VarId:
    """Identifier of a series variable.

    ``kind`` is one of ``analytic``, ``degree``, ``winding``.  Winding
    variables carry a ``side`` (``top``, ``bottom``, ``orbifold``,
    ``orbifold-tilde``) and a winding label ``d >= 1``; degree and analytic
    variables carry only a name.
    """

    kind: str
    name: str = ""
    side: str = ""
    d: int = 0

    @staticmethod
    def analytic(name: str = "z") -> "VarId":
        return VarId("analytic", name=name)

    @staticmethod
    def degree(name: str) -> "VarId":
        return VarId("degree", name=name)

    @staticmethod
    def winding(side: str, d: int) -> "VarId":
        if side not in _WINDING_PREFIX:
            raise ValueError(f"unknown winding side {side!r}")
        if d < 1:
            raise ValueError(f"winding label must be >= 1, got {d}")
        return VarId("winding", side=side, d=d)

    def key(self) -> str:
        """Short string key used in serialized monomials, e.g. ``yt2``."""
        if self.kind == "winding":
            return f"{_WINDING_PREFIX[self.side]}{self.d}"
        return self.name

    def sort_key(self) -> tuple[int, str, int]:
        return (_KIND_RANK[self.kind], self.side or self.name, self.d)

    @staticmethod
    def from_key(key: str) -> "VarId":
        # longer winding prefixes first so 'wt1' does not parse as 'w' + 't1'
        for side, prefix in sorted(_WINDING_PREFIX.items(), key=lambda kv: -len(kv[1])):
            if key.startswith(prefix) and key[len(prefix):].isdigit():
                return VarId.winding(side, int(key[len(prefix):]))
        if key in ("q", "P", "U", "W"):
            return VarId.degree(key)
        return VarId.analytic(key)


@dataclass(frozen=True, slots=True)
class Monomial:
    """Product of variable powers, stored as a sorted tuple of (var, exponent)."""

    exps: tuple[tuple[VarId, int], ...] = ()

    @staticmethod
    def build(powers: Mapping[VarId, int] | Iterable[tuple[VarId, int]]) -> "Monomial":
        items = powers.items() if isinstance(powers, Mapping) else powers
        merged: dict[VarId, int] = {}
        for var, exp in items:
            if exp:
                merged[var] = merged.get(var, 0) + exp
        cleaned = tuple(
            (v, e) for v, e in sorted(merged.items(), key=lambda ve: ve[0].sort_key()) if e
        )
        return Monomial(cleaned)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial.build(self.exps + other.exps)

    def exponent(self, var: VarId) -> int:
        for v, e in self.exps:
            if v == var:
                return e
        return 0

    def analytic_exponent(self) -> int:
        return sum(e for v, e in self.exps if v.kind == "analytic")

    def winding_weight(self) -> int:
        return sum(v.d * e for v, e in self.exps if v.kind == "winding")

    def boundary_count(self) -> int:
        return sum(e for v, e in self.exps if v.kind == "winding")

    def without_analytic(self) -> "Monomial":
        return Monomial(tuple((v, e) for v, e in self.exps if v.kind != "analytic"))

    def key(self) -> str:
        if not self.exps:
            return "1"
        parts = []
        for v, e in self.exps:
            parts.append(v.key() if e == 1 else f"{v.key()}^{e}")
        return "*".join(parts)

    def sort_key(self) -> tuple:
        return tuple((v.sort_key(), e) for v, e in self.exps)

    def __str__(self) -> str:
        return self.key()


MONOMIAL_ONE = Monomial()


@dataclass(frozen=True, slots=True)
class Caps:
    """Truncation bounds: analytic order is exclusive, the rest inclusive."""

    order: int = 12
    max_winding: int = 4
    max_boundary: int = 4
    max_degree: int = 6

    def admits(self, mono: Monomial) -> bool:
        winding_weight = 0
        boundary = 0
        for v, e in mono.exps:
            if v.kind == "analytic":
                if e >= self.order:
                    return False
            elif v.kind == "degree":
                if e > self.max_degree:
                    return False
            else:
                if v.d > self.max_winding:
                    return False
                winding_weight += v.d * e
                boundary += e
        return winding_weight <= self.max_winding and boundary <= self.max_boundary


def _total_degree(mono: Monomial) -> int:
    return sum(e for _, e in mono.exps)


@dataclass(slots=True)
class TruncSeries:
    """Truncated formal power series with GaussRat coefficients.

    ``analytic`` names the single variable that :meth:`derivative` and
    :meth:`antiderivative` act on; binary operations require both operands to
    share the same caps and analytic variable.
    """

    caps: Caps
    coeffs: dict[Monomial, GaussRat] = field(default_factory=dict)
    analytic: VarId = field(default_factory=VarId.analytic)

    def __post_init__(self) -> None:
        cleaned = {}
        for mono, coeff in self.coeffs.items():
            c = as_gauss(coeff)
            if c and self.caps.admits(mono):
                cleaned[mono] = c
        self.coeffs = cleaned

    # ------------------------------------------------------------------ basics

    @staticmethod
    def zero(caps: Caps, analytic: VarId | None = None) -> "TruncSeries":
        return TruncSeries(caps, {}, analytic or VarId.analytic())

    @staticmethod
    def constant(caps: Caps, value: Scalar, analytic: VarId | None = None) -> "TruncSeries":
        return TruncSeries(caps, {MONOMIAL_ONE: as_gauss(value)}, analytic or VarId.analytic())

    @staticmethod
    def one(caps: Caps, analytic: VarId | None = None) -> "TruncSeries":
        return TruncSeries.constant(caps, 1, analytic)

    @staticmethod
    def from_var(caps: Caps, var: VarId, analytic: VarId | None = None) -> "TruncSeries":
        if analytic is None:
            analytic = var if var.kind == "analytic" else VarId.analytic()
        mono = Monomial.build({var: 1})
        return TruncSeries(caps, {mono: GAUSS_ONE}, analytic)

    def coefficient(self, mono: Monomial) -> GaussRat:
        return self.coeffs.get(mono, GAUSS_ZERO)

    def constant_term(self) -> GaussRat:
        return self.coefficient(MONOMIAL_ONE)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def items(self) -> Iterator[tuple[Monomial, GaussRat]]:
        return iter(sorted(self.coeffs.items(), key=lambda mc: mc[0].sort_key()))

    def _like(self, coeffs: dict[Monomial, GaussRat]) -> "TruncSeries":
        return TruncSeries(self.caps, coeffs, self.analytic)

    def _check_compatible(self, other: "TruncSeries") -> None:
        if self.caps != other.caps:
            raise SeriesError("caps mismatch in series operation")
        if self.analytic != other.analytic:
            raise SeriesError("analytic variable mismatch in series operation")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (
            self.caps == other.caps
            and self.analytic == other.analytic
            and self.coeffs == other.coeffs
        )

    # -------------------------------------------------------------- arithmetic

    def __add__(self, other: "TruncSeries | Scalar") -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            other = TruncSeries.constant(self.caps, other, self.analytic)
        self._check_compatible(other)
        out = dict(self.coeffs)
        for mono, coeff in other.coeffs.items():
            out[mono] = out.get(mono, GAUSS_ZERO) + coeff
        return self._like(out)

    __radd__ = __add__

    def __neg__(self) -> "TruncSeries":
        return self._like({m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other: "TruncSeries | Scalar") -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            other = TruncSeries.constant(self.caps, other, self.analytic)
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "TruncSeries":
        return (-self) + other

    def scale(self, value: Scalar) -> "TruncSeries":
        c = as_gauss(value)
        if not c:
            return TruncSeries.zero(self.caps, self.analytic)
        return self._like({m: coeff * c for m, coeff in self.coeffs.items()})

    def __mul__(self, other: "TruncSeries | Scalar") -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return self.scale(other)
        self._check_compatible(other)
        out: dict[Monomial, GaussRat] = {}
        caps = self.caps
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                mono = m1 * m2
                if not caps.admits(mono):
                    continue
                out[mono] = out.get(mono, GAUSS_ZERO) + c1 * c2
        return self._like(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "TruncSeries":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("series exponent must be a non-negative integer")
        result = TruncSeries.one(self.caps, self.analytic)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def inverse(self) -> "TruncSeries":
        """Multiplicative inverse; requires a nonzero constant term.

        Newton iteration ``b <- b*(2 - a*b)`` doubles the truncation-graded
        precision each step, so it reaches a fixed point quickly.
        """
        c0 = self.constant_term()
        if not c0:
            raise NonUnitConstant("cannot invert a series with zero constant term")
        b = TruncSeries.constant(self.caps, c0.inverse(), self.analytic)
        for _ in range(64):
            nxt = b.scale(2) - b * self * b
            if nxt == b:
                return b
            b = nxt
        raise SeriesError("inverse iteration failed to stabilize")

    def __truediv__(self, other: "TruncSeries | Scalar") -> "TruncSeries":
        if isinstance(other, TruncSeries):
            return self * other.inverse()
        return self.scale(as_gauss(other).inverse())

    def exp(self) -> "TruncSeries":
        """Formal exponential; requires a zero constant term."""
        if self.constant_term():
            raise ValueError("exp requires zero constant term")
        result = TruncSeries.one(self.caps, self.analytic)
        term = TruncSeries.one(self.caps, self.analytic)
        n = 1
        while True:
            term = (term * self).scale(Fraction(1, n))
            if term.is_zero:
                return result
            result = result + term
            n += 1
            if n > 4 * (self.caps.order + self.caps.max_winding + 4 * self.caps.max_degree) + 8:
                raise SeriesError("exp did not terminate; caps too loose?")

    def log(self) -> "TruncSeries":
        """Formal logarithm; requires constant term exactly 1."""
        if self.constant_term() != GAUSS_ONE:
            raise ValueError("log requires constant term 1")
        u = self - 1
        result = TruncSeries.zero(self.caps, self.analytic)
        power = TruncSeries.one(self.caps, self.analytic)
        k = 1
        while True:
            power = power * u
            if power.is_zero:
                return result
            sign = 1 if k % 2 == 1 else -1
            result = result + power.scale(Fraction(sign, k))
            k += 1
            if k > 4 * (self.caps.order + self.caps.max_winding + 4 * self.caps.max_degree) + 8:
                raise SeriesError("log did not terminate; caps too loose?")

    # ----------------------------------------------------------------- calculus

    def derivative(self) -> "TruncSeries":
        """Derivative with respect to the analytic variable."""
        out: dict[Monomial, GaussRat] = {}
        var = self.analytic
        for mono, coeff in self.coeffs.items():
            k = mono.exponent(var)
            if not k:
                continue
            lowered = Monomial.build({**dict(mono.exps), var: k - 1})
            out[lowered] = out.get(lowered, GAUSS_ZERO) + coeff * k
        return self._like(out)

    def antiderivative(self, constant: Scalar | None = None) -> "TruncSeries":
        """Antiderivative in the analytic variable.

        The constant of integration is the value of the result at
        ``analytic = 0``; pass ``None`` (the default) to drop it, i.e. use 0.
        Monomials at ``order - 1`` fall outside caps after integration and are
        discarded, consistent with monotone truncation.
        """
        out: dict[Monomial, GaussRat] = {}
        var = self.analytic
        for mono, coeff in self.coeffs.items():
            k = mono.exponent(var)
            raised = Monomial.build({**dict(mono.exps), var: k + 1})
            if not self.caps.admits(raised):
                continue
            out[raised] = out.get(raised, GAUSS_ZERO) + coeff / (k + 1)
        result = self._like(out)
        if constant is not None:
            result = result + TruncSeries.constant(self.caps, constant, self.analytic)
        return result

    # ------------------------------------------------------------ serialization

    def to_jsonable(self) -> list[dict]:
        entries = []
        for mono, coeff in self.items():
            entry = {"monomial": {v.key(): e for v, e in mono.exps}}
            entry.update(coeff.to_json())
            entries.append(entry)
        return entries

    def to_json(self) -> str:
        return json.dumps(self.to_jsonable())

    @staticmethod
    def from_jsonable(
        entries: list[dict], caps: Caps, analytic: VarId | None = None
    ) -> "TruncSeries":
        coeffs: dict[Monomial, GaussRat] = {}
        for entry in entries:
            mono = Monomial.build(
                {VarId.from_key(key): exp for key, exp in entry["monomial"].items()}
            )
            coeffs[mono] = GaussRat.from_json(entry)
        return TruncSeries(caps, coeffs, analytic or VarId.analytic())

    def to_csv_rows(self) -> list[tuple[str, str, str]]:
        return [(mono.key(), str(c.re), str(c.im)) for mono, c in self.items()]

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = [f"({coeff})*{mono.key()}" for mono, coeff in self.items()]
        return " + ".join(parts)


# --------------------------------------------------------------- special series


def exp_i_analytic(caps: Caps, var: VarId | None = None) -> TruncSeries:
    """exp(i*z) as a truncated series in the analytic variable z."""
    var = var or VarId.analytic()
    coeffs = {}
    for m in range(caps.order):
        coeffs[Monomial.build({var: m})] = (GAUSS_I ** m) * Fraction(1, factorial(m))
    return TruncSeries(caps, coeffs, var)


def cos_half(caps: Caps, var: VarId | None = None) -> TruncSeries:
    """cos(z/2) as a truncated series."""
    var = var or VarId.analytic()
    coeffs = {}
    for k in range(0, caps.order, 2):
        half = k // 2
        sign = 1 if half % 2 == 0 else -1
        coeffs[Monomial.build({var: k})] = as_gauss(
            Fraction(sign, (4 ** half) * factorial(k))
        )
    return TruncSeries(caps, coeffs, var)


def sec_even_power(caps: Caps, d: int, var: VarId | None = None) -> TruncSeries:
    """sec(z/2)^(2d) as a truncated series; d >= 0."""
    if d < 0:
        raise ValueError("power must be non-negative")
    return cos_half(caps, var).inverse() ** (2 * d)


def tan_half(caps: Caps, var: VarId | None = None) -> TruncSeries:
    """tan(z/2): the antiderivative of sec(z/2)^2 / 2 vanishing at 0."""
    return sec_even_power(caps, 1, var).scale(Fraction(1, 2)).antiderivative()


def log_sec_half(caps: Caps, var: VarId | None = None) -> TruncSeries:
    """log sec(z/2) = -log cos(z/2), vanishing to order 2 at 0."""
    return -cos_half(caps, var).log()
