r"""Disk, multiple-cover, and gluing weights, plus the Catalan-type grid.

The smooth-chart weights are exact rational functions of a torus weight pair
``(a, b)`` and a framing shift ``k``; the orbifold-chart weights are pure
rationals built from double-factorial ratios.  Gluing identities state that a
degree-d cover of the compact edge factors into its two disk halves times an
explicit gluing constant, and the test suite sweeps them exactly.

The grid part of the module computes rows of powers of the generating
function G satisfying ``G^2 = G + X``, i.e. ``G^n = G^(n-1) + X*G^(n-2)``,
together with the closed binomial form for the row-(2(d+k)) coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Sequence, Union

RatLike = Union[int, Fraction]

__all__ = [
    "catalan",
    "central_binomial_half",
    "df_ratio",
    "disk_factor_smooth",
    "edge_cover",
    "edge_cover_product_oracle",
    "glue_factor_smooth",
    "disk_orbifold",
    "orb_edge_cover",
    "orb_glue_factor",
    "g_power_row",
    "g_power_table",
    "g_lemma_coefficient",
    "f_power_coefficients",
]


def catalan(n: int) -> int:
    """The n-th Catalan number."""
    if n < 0:
        raise ValueError("Catalan index must be non-negative")
    return comb(2 * n, n) // (n + 1)


def central_binomial_half(d: int) -> int:
    """binom(2d-1, d), half the central binomial coefficient; d >= 1."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    return comb(2 * d - 1, d)


def df_ratio(d: int) -> Fraction:
    """(2d-1)!!/(2d)!! as an exact Fraction; equals binom(2d,d)/4^d."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    return Fraction(comb(2 * d, d), 4 ** d)


def _check_weights(d: int, a: RatLike) -> None:
    if d < 1:
        raise ValueError("winding must be >= 1")
    if a == 0:
        raise ValueError("weight a must be nonzero")


def disk_factor_smooth(
    d: int, a: RatLike, b: RatLike, k: int = 0, *, right: bool = False, flipped: bool = False
) -> Fraction:
    r"""Open disk weight of a degree-d disk in a smooth chart.

    ``(a, b)`` are the tangent weights along and off the edge axis at the disk
    vertex; the right-hand vertex sees the framing shift ``k``.  Reversing the
    boundary orientation multiplies the weight by ``(-1)^(d+1)``.
    """
    _check_weights(d, a)
    a = Fraction(a)
    b = Fraction(b)
    value = Fraction(1, d * factorial(d)) / a ** (d - 1)
    for i in range(1, d):
        value *= b * d - a * k * d + a * i if right else b * d - a * i
    if not right:
        value *= (-1) ** (d + 1)
    if flipped:
        value *= (-1) ** (d + 1)
    return value


def edge_cover(d: int, k: int, a: RatLike, b: RatLike) -> Fraction:
    r"""Closed weight of the degree-d multiple cover of a framing-k edge."""
    _check_weights(d, a)
    a = Fraction(a)
    b = Fraction(b)
    value = Fraction((-1) ** (d * (k + 1)), d * factorial(d) ** 2) / a ** (2 * d - 2)
    for i in range(1, d):
        value *= (b * d - a * i) * (b * d - a * k * d + a * i)
    return value


def edge_cover_product_oracle(d: int, k: int, a: RatLike, b: RatLike) -> Fraction:
    r"""Independent product form of :func:`edge_cover`, valid for k >= 2.

    The two length-(d-1) products collapse into one product over the full
    cover degree divided by a product over the framing excess.  Used only as
    a cross-check oracle.
    """
    _check_weights(d, a)
    if k < 2:
        raise ValueError("product form requires framing k >= 2")
    a = Fraction(a)
    b = Fraction(b)
    numer = Fraction(1)
    for i in range(1, d * k):
        numer *= -b * d + a * i
    denom = Fraction(1)
    for i in range(0, d * (k - 2) + 1):
        denom *= d * (b - a) - i * a
    if denom == 0:
        raise ZeroDivisionError("degenerate weights for the product form")
    return Fraction((-1) ** (d + 1), d * factorial(d) ** 2) / a ** (2 * d - 2) * numer / denom


def glue_factor_smooth(d: int, k: int, same_orientation: bool = True) -> int:
    """Gluing constant matching two smooth disk halves to the full cover."""
    if d < 1:
        raise ValueError("winding must be >= 1")
    sign = (-1) ** (d * k + 1) if same_orientation else (-1) ** (d * k + d)
    return sign * d


def disk_orbifold(d: int, twisted: bool = True) -> Fraction:
    """Degree-d orbifold disk weight, in the twisted or untwisted sector."""
    if d < 1:
        raise ValueError("winding must be >= 1")
    if twisted:
        return df_ratio(d) / (2 * d)
    return Fraction(1, 2 * d * d)


def orb_edge_cover(d: int, twisted: bool = True) -> Fraction:
    """Degree-d cover weight of the compact orbifold edge."""
    if d < 1:
        raise ValueError("winding must be >= 1")
    if twisted:
        return df_ratio(d) ** 2 / (2 * d)
    return Fraction(1, 2 * d ** 3)


def orb_glue_factor(d: int) -> int:
    """Gluing constant for two orbifold disk halves; the right half also
    carries a sign (-1)^d relative to the left one."""
    if d < 1:
        raise ValueError("winding must be >= 1")
    return (-1) ** d * 2 * d


# ----------------------------------------------------------------- grid part


def g_power_row(n: int, upto: int) -> list[int]:
    """Coefficients of X^0..X^upto in G^n, via G^n = G^(n-1) + X*G^(n-2)."""
    if n < 0 or upto < 0:
        raise ValueError("row and column bounds must be non-negative")
    row0 = [1] + [0] * upto
    if n == 0:
        return row0
    row1 = [1] + [(-1) ** (k + 1) * catalan(k - 1) for k in range(1, upto + 1)]
    prev, cur = row0, row1
    for _ in range(2, n + 1):
        nxt = [cur[0]] + [cur[j] + prev[j - 1] for j in range(1, upto + 1)]
        prev, cur = cur, nxt
    return cur


def g_power_table(nmax: int, upto: int) -> list[list[int]]:
    """Rows G^1..G^nmax, columns X^0..X^upto."""
    return [g_power_row(n, upto) for n in range(1, nmax + 1)]


def g_lemma_coefficient(d: int, k: int) -> Fraction:
    """Closed form for the X^k coefficient of G^(2(d+k)).

    For d >= 1 this is binom(k+2d-1, 2d-1)*(d+k)/d; the degenerate d = 0 row
    equals 2 for every k >= 1.
    """
    if d < 0 or k < 0:
        raise ValueError("indices must be non-negative")
    if d == 0:
        if k == 0:
            raise ValueError("the (0, 0) entry has no closed form")
        return Fraction(2)
    return Fraction(comb(k + 2 * d - 1, 2 * d - 1) * (d + k), d)


def _poly_mul_trunc(p: Sequence[Fraction], q: Sequence[Fraction], upto: int) -> list[Fraction]:
    out = [Fraction(0)] * (upto + 1)
    for i, pi in enumerate(p):
        if i > upto or not pi:
            continue
        for j, qj in enumerate(q):
            if i + j > upto:
                break
            out[i + j] += pi * qj
    return out


def f_power_coefficients(y: RatLike, upto: int) -> list[Fraction]:
    r"""Coefficients of F(X, y) = exp(y * sum_k ((-1)^(k+1)/k) binom(2k-1,k) X^k).

    At positive integers y = n the result reproduces the G^n rows, which is
    the exponential form of the grid recursion.
    """
    if upto < 0:
        raise ValueError("truncation bound must be non-negative")
    y = Fraction(y)
    arg = [Fraction(0)] * (upto + 1)
    for k in range(1, upto + 1):
        arg[k] = y * Fraction((-1) ** (k + 1), k) * central_binomial_half(k)
    result = [Fraction(1)] + [Fraction(0)] * upto
    term = list(result)
    for n in range(1, upto + 1):
        term = [c / n for c in _poly_mul_trunc(term, arg, upto)]
        result = [r + t for r, t in zip(result, term)]
    return result
