r"""Open-sector potentials on the resolution and orbifold charts.

Resolution side.  A contributing fixed locus pairs multiple covers of the
compact edge (degrees ``covers``) with disks ending on the top or bottom
vertex (windings ``top`` and ``bottom``).  Its invariant is the rational
number :func:`resolution_locus_contribution`; summing loci against
``Q^degree`` and boundary variables reproduces the closed-form potential
:func:`open_potential_resolution`, whose coefficients live in
:class:`~crepant.qfunc.QRational`.  The lone non-wrapping bottom disk is the
special locus ``gamma_prime`` with invariant ``1/d^2``.

Orbifold side.  A locus carries ``m`` interior insertions and a winding
profile; its invariant :func:`orbifold_locus_contribution` is a weighted sum
of Hodge integrals, and the resummed profile series are derivatives of
``sec(z/2)^(2 d)/(2 d)``.  :func:`open_potential_orbifold` assembles the full
potential including the closed sector.

The two routes on each side (locus-by-locus versus resummed closed form) are
computed independently and compared exactly in the checks.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterator, Sequence

from .hodge import closed_orbifold_series, hodge_closed_form
from .qfunc import QRational
from .series import Caps, Monomial, TruncSeries, VarId, sec_even_power
from .vertexedge import central_binomial_half, df_ratio

__all__ = [
    "aut_count",
    "psi_integral_genus0",
    "ResolutionLocus",
    "resolution_locus_contribution",
    "resolution_locus_psi_oracle",
    "ResolutionPotential",
    "open_potential_resolution",
    "resolution_graph_coefficient",
    "OrbifoldLocus",
    "orbifold_locus_contribution",
    "orbifold_locus_series",
    "twisted_disk_series",
    "one_boundary_orbifold_series",
    "profile_series_orbifold",
    "open_potential_orbifold",
    "partitions",
    "profile_splits",
    "winding_profiles",
]

X_VAR = VarId.analytic("x")
Z_VAR = VarId.analytic("z")
Q_VAR = VarId.degree("q")


def aut_count(parts: Sequence[int]) -> int:
    """Order of the symmetry group permuting equal parts."""
    result = 1
    for mult in Counter(parts).values():
        result *= factorial(mult)
    return result


def psi_integral_genus0(exponents: Sequence[int]) -> Fraction:
    r"""Genus-0 psi intersection number: (m-3)!/prod(a_j!) when sum = m - 3.

    ``m`` is the number of marked points, i.e. ``len(exponents)``; any other
    psi degree, or fewer than three points, integrates to zero.
    """
    m = len(exponents)
    if any(a < 0 for a in exponents):
        raise ValueError("psi exponents must be non-negative")
    if m < 3 or sum(exponents) != m - 3:
        return Fraction(0)
    denom = 1
    for a in exponents:
        denom *= factorial(a)
    return Fraction(factorial(m - 3), denom)


def _sorted_parts(parts: Sequence[int], what: str) -> tuple[int, ...]:
    out = tuple(sorted(parts, reverse=True))
    if any(p < 1 for p in out):
        raise ValueError(f"{what} must all be >= 1")
    return out


@dataclass(frozen=True)
class ResolutionLocus:
    """A fixed locus on the resolution chart."""

    covers: tuple[int, ...] = ()
    top: tuple[int, ...] = ()
    bottom: tuple[int, ...] = ()
    gamma_prime: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "covers", _sorted_parts(self.covers, "cover degrees"))
        object.__setattr__(self, "top", _sorted_parts(self.top, "top windings"))
        object.__setattr__(self, "bottom", _sorted_parts(self.bottom, "bottom windings"))
        if self.gamma_prime:
            if self.covers or self.top or len(self.bottom) != 1:
                raise ValueError("gamma_prime locus is a single non-wrapping bottom disk")
        elif not (self.covers or self.top or self.bottom):
            raise ValueError("empty locus")

    @property
    def q_degree(self) -> int:
        if self.gamma_prime:
            return 0
        return sum(self.covers) + sum(self.bottom)

    @property
    def aut(self) -> int:
        return aut_count(self.covers) * aut_count(self.top) * aut_count(self.bottom)

    def boundary_monomial(self) -> Monomial:
        powers: Counter[VarId] = Counter()
        for d in self.top:
            powers[VarId.winding("top", d)] += 1
        for d in self.bottom:
            powers[VarId.winding("bottom", d)] += 1
        return Monomial.build(powers)


def resolution_locus_contribution(locus: ResolutionLocus) -> Fraction:
    r"""Invariant of a resolution fixed locus, closed form.

    With l covers, n disks, leg values ``c_1..c_(l+n)`` and S their sum:

        (1/|Aut|) * (-2)^(l+n-1) * prod_covers (-1)^k binom(2k-1,k)/k
                  * prod_disks (-1)^(d+1) binom(2d-1,d) * S^(l+n-3)

    where the (negative for small loci) power of S is taken in Q.  Values for
    l + n <= 2 agree with the resummed potential; the dedicated psi-integral
    route exists for l + n >= 3.
    """
    if locus.gamma_prime:
        d = locus.bottom[0]
        return Fraction(1, d * d)
    legs = locus.covers + locus.top + locus.bottom
    ln = len(legs)
    value = Fraction((-2) ** (ln - 1), locus.aut)
    for k in locus.covers:
        value *= Fraction((-1) ** k * central_binomial_half(k), k)
    for d in locus.top + locus.bottom:
        value *= (-1) ** (d + 1) * central_binomial_half(d)
    return value * Fraction(sum(legs)) ** (ln - 3)


def resolution_locus_psi_oracle(locus: ResolutionLocus) -> Fraction:
    """Independent evaluation through genus-0 psi integrals (l + n >= 3).

    Expands every leg propagator into psi powers and integrates over the
    moduli of the contracted component; the sum over psi assignments replaces
    the closed multinomial power of S.
    """
    if locus.gamma_prime:
        raise ValueError("gamma_prime locus has no contracted component")
    legs = locus.covers + locus.top + locus.bottom
    ln = len(legs)
    if ln < 3:
        raise ValueError("psi-integral route needs at least three legs")
    value = Fraction((-2) ** (ln - 1), locus.aut)
    for k in locus.covers:
        value *= Fraction((-1) ** k * central_binomial_half(k), k * k)
    for d in locus.top + locus.bottom:
        value *= Fraction((-1) ** (d + 1) * central_binomial_half(d), d)
    total = Fraction(0)
    for assignment in _compositions(ln - 3, ln):
        term = psi_integral_genus0(assignment)
        for c, a in zip(legs, assignment):
            term *= Fraction(c) ** a
        total += term
    prod_legs = 1
    for c in legs:
        prod_legs *= c
    return value * total * prod_legs


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)


def partitions(total: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``total`` into parts >= 1, non-increasing."""
    if total == 0:
        yield ()
        return
    cap = total if max_part is None else min(max_part, total)
    for first in range(cap, 0, -1):
        for rest in partitions(total - first, first):
            yield (first, *rest)


def winding_profiles(max_total: int, max_count: int, min_count: int = 1) -> Iterator[tuple[int, ...]]:
    """All winding multisets with total <= max_total and count in range."""
    for total in range(1, max_total + 1):
        for profile in partitions(total):
            if min_count <= len(profile) <= max_count:
                yield profile


def profile_splits(profile: Sequence[int]) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Distinct splittings of a winding multiset into (top, bottom)."""
    counts = sorted(Counter(profile).items(), reverse=True)

    def rec(idx: int, top: list[int], bottom: list[int]) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
        if idx == len(counts):
            yield tuple(top), tuple(bottom)
            return
        value, mult = counts[idx]
        for take in range(mult + 1):
            yield from rec(idx + 1, top + [value] * take, bottom + [value] * (mult - take))

    yield from rec(0, [], [])


@dataclass(frozen=True)
class OneBoundaryBlock:
    """Exact data of the one-boundary resolution potential at winding d.

    The block means ``const_bottom * y_bottom  +  disk_coeff * (y_top * Q^-d
    + y_bottom) * A_d`` with ``A_d`` the x-antiderivative of
    ``Q^d/(1-Q)^(2d)`` vanishing at q = 0.
    """

    d: int
    const_bottom: Fraction
    disk_coeff: Fraction

    def top_q_coefficient(self, j: int) -> Fraction:
        if j < 0:
            return Fraction(0)
        return self.disk_coeff * Fraction(comb(j + 2 * self.d - 1, 2 * self.d - 1), self.d + j)

    def bottom_q_coefficient(self, j: int) -> Fraction:
        value = self.const_bottom if j == 0 else Fraction(0)
        return value + self.top_q_coefficient(j - self.d)


@dataclass
class ResolutionPotential:
    """The resummed open potential on the resolution chart."""

    max_winding: int
    max_boundary: int
    cubic_coeff: Fraction
    one_boundary: dict[int, OneBoundaryBlock]
    multi_boundary: dict[Monomial, QRational]

    def closed_q_coefficient(self, j: int) -> Fraction:
        """Q^j coefficient of the closed-sector series (j >= 1)."""
        return Fraction(-1, j ** 3) if j >= 1 else Fraction(0)

    def q_coefficient(self, ymono: Monomial, j: int) -> Fraction:
        """Coefficient of ``ymono * Q^j``; the cubic term is not Q-graded."""
        if not ymono.exps:
            return self.closed_q_coefficient(j)
        if ymono.boundary_count() == 1:
            (var, _), = ymono.exps
            block = self.one_boundary.get(var.d)
            if block is None:
                return Fraction(0)
            if var.side == "top":
                return block.top_q_coefficient(j)
            return block.bottom_q_coefficient(j)
        qr = self.multi_boundary.get(ymono)
        if qr is None:
            return Fraction(0)
        return qr.expand(j).get(j, Fraction(0))

    def to_series(self, caps: Caps) -> TruncSeries:
        """Expand in x, q, and boundary variables (Q^j -> q^j e^(jx))."""
        total = TruncSeries.zero(caps, X_VAR)
        x3 = Monomial.build({X_VAR: 3})
        if caps.admits(x3):
            total = total + TruncSeries(caps, {x3: self.cubic_coeff}, X_VAR)
        ymonos = [Monomial()]
        for d, _ in self.one_boundary.items():
            ymonos.append(Monomial.build({VarId.winding("top", d): 1}))
            ymonos.append(Monomial.build({VarId.winding("bottom", d): 1}))
        ymonos.extend(self.multi_boundary.keys())
        for ymono in ymonos:
            yseries = TruncSeries(caps, {ymono: Fraction(1)}, X_VAR)
            if ymono.exps and not caps.admits(ymono):
                continue
            for j in range(0, caps.max_degree + 1):
                coeff = self.q_coefficient(ymono, j)
                if not coeff:
                    continue
                total = total + yseries * _q_power_series(caps, j).scale(coeff)
        return total


def _q_power_series(caps: Caps, j: int) -> TruncSeries:
    """Q^j = q^j e^(jx) as a series in q and x."""
    coeffs = {}
    for m in range(caps.order):
        coeffs[Monomial.build({Q_VAR: j, X_VAR: m})] = Fraction(j ** m, factorial(m))
    return TruncSeries(caps, coeffs, X_VAR)


def open_potential_resolution(max_winding: int, max_boundary: int) -> ResolutionPotential:
    """Assemble the resummed resolution potential up to the given profile caps."""
    if max_winding < 1 or max_boundary < 1:
        raise ValueError("profile caps must be >= 1")
    one_boundary = {}
    for d in range(1, max_winding + 1):
        one_boundary[d] = OneBoundaryBlock(
            d=d,
            const_bottom=Fraction(1, d * d),
            disk_coeff=Fraction((-1) ** (d + 1) * central_binomial_half(d), d),
        )
    multi = {}
    for profile in winding_profiles(max_winding, max_boundary, min_count=2):
        d_total = sum(profile)
        base = QRational.geometric_core(d_total).x_derivative_iter(len(profile) - 2)
        sign_prod = 1
        for d in profile:
            sign_prod *= (-1) ** d * central_binomial_half(d)
        for top, bottom in profile_splits(profile):
            scalar = Fraction(-(2 ** (len(profile) - 1)) * sign_prod,
                              d_total * aut_count(top) * aut_count(bottom))
            powers: Counter[VarId] = Counter()
            for d in top:
                powers[VarId.winding("top", d)] += 1
            for d in bottom:
                powers[VarId.winding("bottom", d)] += 1
            multi[Monomial.build(powers)] = scalar * base.shifted(-sum(top))
    return ResolutionPotential(
        max_winding=max_winding,
        max_boundary=max_boundary,
        cubic_coeff=Fraction(-1, 12),
        one_boundary=one_boundary,
        multi_boundary=multi,
    )


def resolution_graph_coefficient(ymono: Monomial, j: int) -> Fraction:
    """Sum of locus invariants contributing to ``ymono * Q^j``.

    This is the locus-by-locus route: enumerate cover multisets filling the
    Q-degree left over by the bottom windings, plus the non-wrapping disk at
    degree zero.  It must match ``ResolutionPotential.q_coefficient``.
    """
    top: list[int] = []
    bottom: list[int] = []
    for var, exp in ymono.exps:
        if var.kind != "winding" or var.side not in ("top", "bottom"):
            raise ValueError("expected a monomial in resolution boundary variables")
        (top if var.side == "top" else bottom).extend([var.d] * exp)
    total = Fraction(0)
    remaining = j - sum(bottom)
    if remaining >= 0:
        for covers in partitions(remaining):
            if not (covers or top or bottom):
                continue
            locus = ResolutionLocus(covers=covers, top=tuple(top), bottom=tuple(bottom))
            total += resolution_locus_contribution(locus)
    if j == 0 and not top and len(bottom) == 1:
        total += resolution_locus_contribution(
            ResolutionLocus(bottom=tuple(bottom), gamma_prime=True)
        )
    return total


# ------------------------------------------------------------- orbifold side


@dataclass(frozen=True)
class OrbifoldLocus:
    """Orbifold-chart locus: m interior insertions and a winding profile."""

    insertions: int
    profile: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.insertions < 0:
            raise ValueError("insertion count must be >= 0")
        object.__setattr__(self, "profile", _sorted_parts(self.profile, "windings"))


def orbifold_locus_contribution(locus: OrbifoldLocus) -> Fraction:
    r"""Invariant of an orbifold locus as a weighted sum of Hodge integrals.

    Stable loci evaluate ``(1/|Aut|) prod df_ratio(d_i) * sum over the Hodge
    grading i and psi assignments of L(g, i, j) prod d_i^(j_i)`` at
    ``g = (m + n - 2)/2``.  The unstable cases are pinned by the resummed
    potential: the bare disk gives ``1/(2 d^2)``, loci with ``m + n = 2`` give
    ``(1/|Aut|) prod df_ratio(d_i) / (2 d)``, and everything with ``m + n``
    odd (beyond the bare disk) vanishes.
    """
    m = locus.insertions
    profile = locus.profile
    n = len(profile)
    if n == 0:
        # closed sector: branch counting needs m = 2g + 2 >= 4 and even
        if m < 4 or m % 2:
            return Fraction(0)
        return hodge_closed_form((m - 2) // 2, 1)
    d_total = sum(profile)
    if m == 0 and n == 1:
        return Fraction(1, 2 * d_total * d_total)
    if (m + n) % 2:
        return Fraction(0)
    weight = Fraction(1, aut_count(profile))
    for d in profile:
        weight *= df_ratio(d)
    if m + n == 2:
        return weight / (2 * d_total)
    g = (m + n - 2) // 2
    total = Fraction(0)
    for i in range(1, g + 1):
        for assignment in _compositions(i - 1, n):
            term = hodge_closed_form(g, i, assignment)
            if not term:
                continue
            for d, a in zip(profile, assignment):
                term *= Fraction(d) ** a
            total += term
    return weight * total


def orbifold_locus_series(profile: Sequence[int], caps: Caps, var: VarId = Z_VAR) -> TruncSeries:
    """Locus-route generating series: sum of contributions times z^m/m!."""
    profile_t = _sorted_parts(profile, "windings")
    coeffs = {}
    for m in range(caps.order):
        value = orbifold_locus_contribution(OrbifoldLocus(m, profile_t))
        if value:
            coeffs[Monomial.build({var: m})] = Fraction(value, factorial(m))
    return TruncSeries(caps, coeffs, var)


def twisted_disk_series(d: int, caps: Caps, var: VarId = Z_VAR) -> TruncSeries:
    """Twisted-sector disk series: df_ratio(d)/(2d) times the antiderivative
    of sec(z/2)^(2d) vanishing at z = 0."""
    if d < 1:
        raise ValueError("winding must be >= 1")
    core = sec_even_power(caps, d, var).antiderivative()
    return core.scale(df_ratio(d) / (2 * d))


def one_boundary_orbifold_series(d: int, caps: Caps, var: VarId = Z_VAR) -> TruncSeries:
    """Full one-boundary series: untwisted constant plus the twisted part."""
    return twisted_disk_series(d, caps, var) + TruncSeries.constant(
        caps, Fraction(1, 2 * d * d), var
    )


def profile_series_orbifold(
    profile: Sequence[int], caps: Caps, var: VarId = Z_VAR
) -> TruncSeries:
    """Resummed series for a winding profile with n >= 2 boundaries.

    Equals ``(1/|Aut|) prod df_ratio(d_i)`` times the (n-2)-nd z-derivative
    of ``sec(z/2)^(2 d)/(2 d)``; the locus route must reproduce it.
    """
    profile_t = _sorted_parts(profile, "windings")
    if len(profile_t) < 2:
        raise ValueError("use the one-boundary series for a single winding")
    d_total = sum(profile_t)
    # differentiate at inflated order so every coefficient below caps.order
    # survives the (n-2)-fold derivative
    inflated = Caps(
        order=caps.order + len(profile_t) - 2,
        max_winding=caps.max_winding,
        max_boundary=caps.max_boundary,
        max_degree=caps.max_degree,
    )
    series = sec_even_power(inflated, d_total, var).scale(Fraction(1, 2 * d_total))
    for _ in range(len(profile_t) - 2):
        series = series.derivative()
    weight = Fraction(1, aut_count(profile_t))
    for d in profile_t:
        weight *= df_ratio(d)
    return TruncSeries(caps, series.scale(weight).coeffs, var)


def open_potential_orbifold(caps: Caps, var: VarId = Z_VAR) -> TruncSeries:
    """Closed sector plus all boundary profiles within the caps."""
    total = closed_orbifold_series(caps, var)
    for d in range(1, caps.max_winding + 1):
        wmono = Monomial.build({VarId.winding("orbifold", d): 1})
        if not caps.admits(wmono):
            continue
        wseries = TruncSeries(caps, {wmono: Fraction(1)}, var)
        total = total + wseries * one_boundary_orbifold_series(d, caps, var)
    for profile in winding_profiles(caps.max_winding, caps.max_boundary, min_count=2):
        powers: Counter[VarId] = Counter()
        for d in profile:
            powers[VarId.winding("orbifold", d)] += 1
        wmono = Monomial.build(powers)
        if not caps.admits(wmono):
            continue
        wseries = TruncSeries(caps, {wmono: Fraction(1)}, var)
        total = total + wseries * profile_series_orbifold(profile, caps, var)
    return total
