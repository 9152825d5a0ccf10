r"""Hodge integrals over hyperelliptic loci and their generating series.

The basic quantity is the integral ``L(g, i, (m_1..m_l))``: over the space of
stable genus-0 curves with 2g+2 markings carrying a double cover branched at
the markings, integrate the i-th Chern class of the dual Hodge bundle of the
cover against psi powers ``m_1..m_l`` at the first l markings.  It vanishes
unless ``sum(m) = i - 1`` and the marking count fits, i.e. ``l <= 2g + 2``.

Two independent evaluation routes are provided:

* :func:`hodge_closed_form`, the product formula through coefficients of
  powers of ``log sec(x/2)``,
* :func:`hodge_recursion`, a fixed-point localization recursion on the
  branch-point projective line that peels one psi insertion per step and only
  consults the closed form for length <= 1 insertions.

Both return exact Fractions and must agree everywhere; the test suite sweeps
the full stable range.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import comb, factorial
from typing import Sequence

from .series import Caps, Monomial, TruncSeries, VarId, log_sec_half, sec_even_power

__all__ = [
    "multinomial",
    "hodge_closed_form",
    "hodge_recursion",
    "hodge_generating_series",
    "closed_orbifold_series",
    "X_VAR",
]

X_VAR = VarId.analytic("x")


def multinomial(parts: Sequence[int]) -> int:
    """Multinomial coefficient (sum parts)! / prod(parts!)."""
    total = 0
    result = 1
    for p in parts:
        total += p
        result *= comb(total, p)
    return result


@cache
def _log_sec_power_coeffs(power: int, order: int) -> tuple[Fraction, ...]:
    """Coefficients of (log sec(x/2))**power up to x^(order-1)."""
    caps = Caps(order=order, max_winding=0, max_boundary=0, max_degree=0)
    series = log_sec_half(caps, X_VAR) ** power
    return tuple(
        series.coefficient(Monomial.build({X_VAR: k})).real_part() for k in range(order)
    )


def _is_admissible(g: int, i: int, powers: Sequence[int]) -> bool:
    if g < 1 or i < 1:
        return False
    if any(m < 0 for m in powers):
        raise ValueError("psi exponents must be non-negative")
    if len(powers) > 2 * g + 2:
        return False
    return sum(powers) == i - 1


def hodge_closed_form(g: int, i: int, powers: Sequence[int] = ()) -> Fraction:
    r"""Evaluate L(g, i, powers) by the closed product formula.

    The value is ``multinomial(powers) * 2^(i-1)/i! * (2g)!`` times the
    coefficient of ``x^(2g)`` in ``(log sec(x/2))^i``.  Inadmissible data
    (wrong psi-degree sum, too many insertions, or nonpositive g or i)
    evaluates to 0.
    """
    if not _is_admissible(g, i, powers):
        return Fraction(0)
    coeff = _log_sec_power_coeffs(i, 2 * g + 1)[2 * g]
    return multinomial(powers) * Fraction(2 ** (i - 1) * factorial(2 * g), factorial(i)) * coeff


def hodge_recursion(g: int, i: int, powers: Sequence[int] = ()) -> Fraction:
    """Evaluate L(g, i, powers) by the localization recursion.

    Insertions are sorted so the largest psi power is peeled and the two
    smallest serve as the pair fixed over the second branch point; the choice
    is immaterial (the integrals are symmetric in the markings) and unit tests
    check other designations give the same value.
    """
    if not _is_admissible(g, i, powers):
        return Fraction(0)
    canon = tuple(sorted((m for m in powers if m), reverse=True))
    return _recursion_canonical(g, i, canon)


@cache
def _recursion_canonical(g: int, i: int, canon: tuple[int, ...]) -> Fraction:
    if i == 1:
        # no psi insertions survive: (2g)! times a log sec coefficient
        return factorial(2 * g) * _log_sec_power_coeffs(1, 2 * g + 1)[2 * g]
    if len(canon) <= 1:
        coeff = _log_sec_power_coeffs(i, 2 * g + 1)[2 * g]
        return Fraction(2 ** (i - 1) * factorial(2 * g), factorial(i)) * coeff
    work = canon if len(canon) >= 3 else canon + (0,)
    return _recursion_step(g, i, work)


@cache
def _recursion_step(g: int, i: int, work: tuple[int, ...]) -> Fraction:
    """One peeling step for an arrangement with the peeled entry first.

    ``work`` has length >= 3: entry 0 is peeled, the last two entries are the
    pair sent to the second branch point, the rest distribute freely.
    """
    if work[0] < 1:
        raise ValueError("peeled psi power must be positive")
    m1 = work[0]
    free = work[1:-2]
    forced = work[-2:]
    npts = len(work)  # inserted marks in play this step
    total = Fraction(0)
    for g1 in range(1, g):
        g2 = g - g1
        for k in range(1, i):
            for bits in range(1 << len(free)):
                chosen = [free[j] for j in range(len(free)) if bits >> j & 1]
                rest = [free[j] for j in range(len(free)) if not bits >> j & 1]
                n_exp = k - 1 - sum(rest)
                if n_exp < 0:
                    continue
                p_exp = m1 - 1 - n_exp
                if p_exp < 0:
                    continue
                top = 2 * g + 2 - npts
                bot = 2 * g1 - 1 - len(chosen)
                if bot < 0 or bot > top:
                    continue
                sign = 1 if n_exp % 2 == 0 else -1
                left = hodge_recursion(g1, i - k, (p_exp, *chosen, *forced))
                if not left:
                    continue
                right = hodge_recursion(g2, k, (n_exp, *rest))
                if not right:
                    continue
                total += comb(top, bot) * sign * left * right
    return 2 * total


def hodge_generating_series(
    windings: Sequence[int], caps: Caps, var: VarId = X_VAR
) -> TruncSeries:
    """Generating series of L values with winding weights attached.

    For windings ``(d_1..d_n)`` with total ``d`` this is
    ``sec(x/2)^(2d) / (2d)``, whose ``x^(2g)`` coefficient times ``(2g)!``
    resums ``sum over i, (j_1..j_n) of L(g, i, j) * prod(d_k^(j_k))``.
    """
    if not windings or any(d < 1 for d in windings):
        raise ValueError("windings must be a non-empty list of positive integers")
    d = sum(windings)
    return sec_even_power(caps, d, var).scale(Fraction(1, 2 * d))


def closed_orbifold_series(caps: Caps, var: VarId = VarId.analytic("z")) -> TruncSeries:
    """The closed-sector potential H with H'' = log sec(z/2), H(0) = H'(0) = 0."""
    return log_sec_half(caps, var).antiderivative().antiderivative()
