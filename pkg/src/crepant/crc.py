r"""Analytic continuation between the resolution and orbifold charts.

The resolution-side potentials are rational in the combined degree variable
Q (degree variable times the exponential of the insertion variable), while
the orbifold-side potentials are trigonometric series in the insertion
variable z.  Setting the degree variable to -1 termwise diverges; instead a
rational function of Q is evaluated at ``Q = -exp(iz)`` and expanded as an
exact series over the Gaussian rationals.  The key identity is

    (-E)^d / (1 + E)^(2d) = (-1)^d 4^(-d) sec(z/2)^(2d),   E = exp(iz),

which turns the edge-class cores into secant powers.  The antiderivative
blocks continue to ``i (-1)^d 4^(-d)`` times the antiderivative of
``sec(z/2)^(2d)`` plus an exact constant computed in
:func:`continuation_constant`.

Two verifiers compare the charts coefficient by coefficient:

* :func:`verify_open_crc` matches the open potentials.  The insertion
  variable goes to ``iz``, the degree variable to -1, and the top and bottom
  winding variables both map to the orbifold winding variable up to factors
  of ``i/2`` and ``(-e^(iz))^d``.  Comparison skips the finitely many
  unstable constants: the closed sector is compared at the level of third
  derivatives, and one-boundary terms skip the z-constant.
* :func:`verify_closed_crc` matches the two tree sums for the compactified
  geometries tree by tree, along with the standalone vertex and edge image
  identities that make the general tree argument work.  Single-edge trees,
  whose separate bookkeeping term carries no continuation constant, are
  compared exactly at all orders.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Mapping

from .potentials import (
    one_boundary_orbifold_series,
    open_potential_resolution,
    profile_series_orbifold,
    twisted_disk_series,
)
from .qfunc import QRational
from .report import CheckResult, series_comparison
from .gauss import GAUSS_I
from .series import (
    Caps,
    Monomial,
    SeriesError,
    TruncSeries,
    VarId,
    exp_i_analytic,
    sec_even_power,
    tan_half,
)
from .trees import (
    LocalizationTree,
    Z_VAR,
    enumerate_trees,
    orbifold_tree_series,
    p_exp_w,
    resolution_tree_value,
    single_edge_extra_series,
)
from .vertexedge import central_binomial_half

__all__ = [
    "ContinuationPole",
    "QContinuation",
    "continuation_constant",
    "continued_antiderivative",
    "continue_polynomial_ratio",
    "continue_rational_Q",
    "verify_open_crc",
    "verify_closed_crc",
]

HALF_I = GAUSS_I * Fraction(1, 2)


class ContinuationPole(SeriesError):
    """The denominator vanishes at Q = -1, so the continuation has a pole."""


class QContinuation:
    """Evaluation of rational functions of Q at ``Q = -exp(iz)``.

    Caches powers of ``exp(iz)``, inverse powers of ``1 + exp(iz)``, and the
    continued antiderivative blocks, so repeated continuations during a
    verification sweep stay cheap.
    """

    def __init__(self, caps: Caps, var: VarId = Z_VAR) -> None:
        self.caps = caps
        self.var = var
        self._exp = exp_i_analytic(caps, var)
        self._exp_powers: dict[int, TruncSeries] = {
            0: TruncSeries.one(caps, var),
            1: self._exp,
        }
        self._inv_one_plus = (TruncSeries.one(caps, var) + self._exp).inverse()
        self._inv_one_plus_powers: dict[int, TruncSeries] = {
            0: TruncSeries.one(caps, var),
            1: self._inv_one_plus,
        }
        self._a_images: dict[int, TruncSeries] = {}

    def exp_power(self, j: int) -> TruncSeries:
        """``exp(iz)^j`` for any integer j."""
        if j not in self._exp_powers:
            if j > 0:
                self._exp_powers[j] = self.exp_power(j - 1) * self._exp
            else:
                if -1 not in self._exp_powers:
                    self._exp_powers[-1] = self._exp.inverse()
                self._exp_powers[j] = self.exp_power(j + 1) * self._exp_powers[-1]
        return self._exp_powers[j]

    def minus_exp_power(self, j: int) -> TruncSeries:
        """``(-exp(iz))^j`` for any integer j."""
        return self.exp_power(j).scale(Fraction((-1) ** j))

    def inv_one_plus_power(self, m: int) -> TruncSeries:
        """``(1 + exp(iz))^(-m)`` for m >= 0; the constant term is 2^(-m)."""
        if m not in self._inv_one_plus_powers:
            self._inv_one_plus_powers[m] = (
                self.inv_one_plus_power(m - 1) * self._inv_one_plus
            )
        return self._inv_one_plus_powers[m]

    def rational(self, qr: QRational) -> TruncSeries:
        """Continue a Laurent-over-(1-Q)-power rational function."""
        num = TruncSeries.zero(self.caps, self.var)
        for j, c in sorted(qr.numer.items()):
            num = num + self.minus_exp_power(j).scale(c)
        return num * self.inv_one_plus_power(qr.denom_pow)

    def antiderivative_image(self, d: int) -> TruncSeries:
        if d not in self._a_images:
            self._a_images[d] = continued_antiderivative(d, self.caps, self.var)
        return self._a_images[d]


def continuation_constant(d: int) -> Fraction:
    """Exact value at z = 0 of the continued winding-d antiderivative block.

    The block is the antiderivative of ``Q^d/(1-Q)^(2d)`` in the insertion
    variable, normalized to vanish at degree-variable zero; equivalently
    ``int_0^Q t^(d-1) (1-t)^(-2d) dt``.  Continuing to Q = -1 and
    substituting ``t = -u/(1-u)`` turns this into half of the symmetric Beta
    integral ``B(d, d)``, giving ``(-1)^d / (d * binom(2d, d))``.
    """
    if d < 1:
        raise ValueError("winding must be >= 1")
    return Fraction((-1) ** d, d * comb(2 * d, d))


def continued_antiderivative(d: int, caps: Caps, var: VarId = Z_VAR) -> TruncSeries:
    """Continued image of the winding-d antiderivative block.

    Equals ``i (-1)^d 4^(-d)`` times the antiderivative of ``sec(z/2)^(2d)``
    vanishing at z = 0, plus :func:`continuation_constant`.
    """
    core = sec_even_power(caps, d, var).antiderivative()
    return core.scale(GAUSS_I * Fraction((-1) ** d, 4 ** d)) + TruncSeries.constant(
        caps, continuation_constant(d), var
    )


def continue_polynomial_ratio(
    numer: Mapping[int, Fraction],
    denom: Mapping[int, Fraction],
    caps: Caps,
    var: VarId = Z_VAR,
) -> TruncSeries:
    """Continue ``numer(Q)/denom(Q)`` to ``Q = -exp(iz)`` as a z-series.

    Both arguments are Laurent polynomials given as power -> coefficient
    maps.  Raises :class:`ContinuationPole` if the denominator vanishes at
    Q = -1.
    """
    if not denom or all(not c for c in denom.values()):
        raise ContinuationPole("denominator is identically zero")
    at_minus_one = sum(Fraction(c) * (-1) ** j for j, c in denom.items())
    if at_minus_one == 0:
        raise ContinuationPole("denominator vanishes at Q = -1")
    cont = QContinuation(caps, var)
    num = TruncSeries.zero(caps, var)
    for j, c in sorted(numer.items()):
        num = num + cont.minus_exp_power(j).scale(Fraction(c))
    den = TruncSeries.zero(caps, var)
    for j, c in sorted(denom.items()):
        den = den + cont.minus_exp_power(j).scale(Fraction(c))
    return num * den.inverse()


def continue_rational_Q(qr: QRational, caps: Caps, var: VarId = Z_VAR) -> TruncSeries:
    """Continue a :class:`~crepant.qfunc.QRational` to ``Q = -exp(iz)``.

    The denominator ``(1-Q)^m`` evaluates to ``2^m`` at Q = -1, so this
    particular family never hits :class:`ContinuationPole`.
    """
    denom = {
        k: Fraction((-1) ** k * comb(qr.denom_pow, k))
        for k in range(qr.denom_pow + 1)
    }
    return continue_polynomial_ratio(qr.numer, denom, caps, var)


def _disk_coeff(d: int) -> Fraction:
    return Fraction((-1) ** (d + 1) * central_binomial_half(d), d)


# ------------------------------------------------------------------ open side


def verify_open_crc(
    max_winding: int = 4, max_boundary: int = 4, order: int = 12
) -> list[CheckResult]:
    """Match the open potentials of the two charts up to unstable terms.

    ``order`` is the highest compared power of z.  The closed sector is
    compared through its third derivative in the insertion variable (the
    continued lower derivatives contain constants outside the coefficient
    field); one-boundary terms are compared for z^m with m >= 1;
    multi-boundary terms are compared at every order.
    """
    caps = Caps(
        order=order + 1,
        max_winding=max_winding,
        max_boundary=max_boundary,
        max_degree=6,
    )
    cont = QContinuation(caps, Z_VAR)
    potential = open_potential_resolution(max_winding, max_boundary)
    results: list[CheckResult] = []

    # closed sector: third insertion-variable derivative is -1/2 - Q/(1-Q),
    # whose continuation times i^3 must equal (1/2) tan(z/2)
    third = QRational({0: Fraction(-1, 2)}, 0) - QRational({1: Fraction(1)}, 1)
    transformed = cont.rational(third).scale(GAUSS_I ** 3)
    target = tan_half(caps, Z_VAR).scale(Fraction(1, 2))
    results += series_comparison("ocrc/closed", transformed, target)

    for d in range(1, max_winding + 1):
        block = potential.one_boundary[d]
        transformed = (
            TruncSeries.constant(caps, block.const_bottom, Z_VAR)
            + cont.antiderivative_image(d).scale(2 * block.disk_coeff)
        ).scale(HALF_I)
        target = one_boundary_orbifold_series(d, caps, Z_VAR)
        prefix = Monomial.build({VarId.winding("orbifold", d): 1})
        results += series_comparison(
            "ocrc/one-boundary", transformed, target, min_analytic=1, prefix=prefix
        )

    transformed_by_profile: dict[tuple[int, ...], TruncSeries] = {}
    for ymono, qr in potential.multi_boundary.items():
        tops: list[int] = []
        bottoms: list[int] = []
        for var, exp in ymono.exps:
            (tops if var.side == "top" else bottoms).extend([var.d] * exp)
        n = len(tops) + len(bottoms)
        term = cont.rational(qr) * cont.minus_exp_power(sum(tops))
        term = term.scale(HALF_I ** n)
        profile = tuple(sorted(tops + bottoms, reverse=True))
        current = transformed_by_profile.get(profile)
        transformed_by_profile[profile] = term if current is None else current + term
    for profile in sorted(transformed_by_profile):
        target = profile_series_orbifold(profile, caps, Z_VAR)
        prefix = Monomial.build(
            [(VarId.winding("orbifold", d), 1) for d in profile]
        )
        results += series_comparison(
            "ocrc/multi-boundary",
            transformed_by_profile[profile],
            target,
            prefix=prefix,
        )
    return results


# ---------------------------------------------------------------- closed side


def _transformed_tree_series(
    tree: LocalizationTree, cont: QContinuation
) -> TruncSeries:
    """Image of the resolution-side tree value under the closed-chart map.

    The exceptional-class factor maps to ``(-1)^D P^D exp(iz)^D exp(D W)``
    with D the total edge degree; each rational-in-Q coefficient is
    continued, and each antiderivative block is replaced by its continued
    image.
    """
    caps = cont.caps
    value = resolution_tree_value(tree)
    front = p_exp_w(caps, value.u_degree, cont.var).scale(
        Fraction((-1) ** value.u_degree)
    ) * cont.exp_power(value.u_degree)
    total = TruncSeries.zero(caps, cont.var)
    for blocks, qr in sorted(value.terms.items()):
        term = cont.rational(qr)
        for d in blocks:
            term = term * cont.antiderivative_image(d)
        total = total + term
    return total * front


def verify_closed_crc(
    max_edges: int = 4, max_label: int = 3, order: int = 8, max_degree: int = 6
) -> list[CheckResult]:
    """Match the two closed-chart tree sums tree by tree.

    For every tree within the caps the continued resolution value must equal
    the orbifold value for z^m with m >= 1; single-edge trees, whose
    bookkeeping term carries no continuation constant, are compared exactly
    at every order.  The vertex-image, edge-image, and single-edge
    decomposition identities are also checked standalone for each edge label.
    """
    caps = Caps(
        order=order + 1,
        max_winding=max(max_label, 1),
        max_boundary=max(max_edges, 1),
        max_degree=max_degree,
    )
    cont = QContinuation(caps, Z_VAR)
    results: list[CheckResult] = []

    for idx, tree in enumerate(enumerate_trees(max_degree, max_label, max_edges)):
        xside = orbifold_tree_series(tree, caps)
        if len(tree.edges) == 1:
            xside = xside + single_edge_extra_series(tree.edges[0][2], caps)
        yimage = _transformed_tree_series(tree, cont)
        labels = "+".join(
            str(d) for d in sorted((d for _, _, d in tree.edges), reverse=True)
        )
        min_analytic = 0 if len(tree.edges) == 1 else 1
        results += series_comparison(
            f"ccrc/tree-{idx:02d}[{labels}]",
            yimage,
            xside,
            min_analytic=min_analytic,
        )

    for d in range(1, max_label + 1):
        results += _vertex_image_checks(d, cont)
        results += _edge_image_checks(d, cont)
        results += _single_edge_decomposition_check(d, cont)
    return results


def _vertex_image_checks(d: int, cont: QContinuation) -> list[CheckResult]:
    """Univalent vertex images on both sides of the compact curve.

    With the exact continuation constant, the image of each univalent vertex
    term equals half the orbifold disk series shifted by ``±i/(4d^2)`` times
    the winding variable; the tilde side carries an extra ``(-1)^d``.
    """
    caps = cont.caps
    c_d = _disk_coeff(d)
    a_img = cont.antiderivative_image(d)
    half_disk = twisted_disk_series(d, caps, cont.var).scale(Fraction(1, 2))
    offset = TruncSeries.constant(caps, GAUSS_I * Fraction(1, 4 * d * d), cont.var)
    w = Monomial.build({VarId.winding("orbifold", d): 1})
    wt = Monomial.build({VarId.winding("orbifold-tilde", d): 1})
    results = []

    # plain side, cover chosen towards the top: winding image (i/2)(-E)^d
    # meets the coefficient c_d Q^(-d) A_d and the exponentials cancel
    lhs = (
        cont.minus_exp_power(d).scale(HALF_I)
        * cont.rational(QRational.monomial(-d, c_d))
        * a_img
    )
    results += series_comparison("ccrc/v1-chosen", lhs, half_disk - offset, prefix=w)

    # plain side, cover not chosen: winding image (i/2), coefficient
    # c_d A_d + 1/d^2
    lhs = (
        cont.rational(QRational.monomial(0, c_d)) * a_img
        + TruncSeries.constant(caps, Fraction(1, d * d), cont.var)
    ).scale(HALF_I)
    results += series_comparison("ccrc/v1-other", lhs, half_disk + offset, prefix=w)

    tilde_half = half_disk.scale(Fraction((-1) ** d))
    tilde_offset = offset.scale(Fraction((-1) ** d))

    # tilde side, cover chosen: winding image (-1)^d (i/2), coefficient
    # c_d A_d + 1/d^2
    lhs = (
        cont.rational(QRational.monomial(0, c_d)) * a_img
        + TruncSeries.constant(caps, Fraction(1, d * d), cont.var)
    ).scale(HALF_I * Fraction((-1) ** d))
    results += series_comparison(
        "ccrc/v2-chosen", lhs, tilde_half + tilde_offset, prefix=wt
    )

    # tilde side, cover not chosen: winding image (i/2) exp(iz)^d meets
    # c_d Q^(-d) A_d and again the exponentials cancel
    lhs = (
        cont.exp_power(d).scale(HALF_I)
        * cont.rational(QRational.monomial(-d, c_d))
        * a_img
    )
    results += series_comparison(
        "ccrc/v2-other", lhs, tilde_half - tilde_offset, prefix=wt
    )
    return results


def _edge_image_checks(d: int, cont: QContinuation) -> list[CheckResult]:
    """The resolution edge factor maps to twice the orbifold edge factor.

    Checked with the winding-variable denominators multiplied through: the
    image of ``-d (U e^Y)^d`` must equal twice the orbifold edge factor times
    the product of the two winding-variable images, for both choices of the
    cover direction.
    """
    caps = cont.caps
    lhs = p_exp_w(caps, d, cont.var).scale(Fraction(-d * (-1) ** d)) * cont.exp_power(d)
    orb_edge = p_exp_w(caps, d, cont.var).scale(Fraction(2 * (-1) ** d * 2 * d))
    results = []
    # cover chosen towards the top: denominators (i/2)(-E)^d and (-1)^d (i/2)
    pair = cont.minus_exp_power(d).scale(HALF_I * (HALF_I * Fraction((-1) ** d)))
    results += series_comparison("ccrc/edge-chosen", lhs, orb_edge * pair)
    # cover not chosen: denominators (i/2) and (i/2) exp(iz)^d
    pair = cont.exp_power(d).scale(HALF_I * HALF_I)
    results += series_comparison("ccrc/edge-other", lhs, orb_edge * pair)
    return results


def _single_edge_decomposition_check(d: int, cont: QContinuation) -> list[CheckResult]:
    """Continued single-edge tree value minus the orbifold vertex-edge
    product must equal the separate disk-gluing bookkeeping term exactly."""
    caps = cont.caps
    tree = LocalizationTree(("b", "w"), ((0, 1, d),))
    difference = _transformed_tree_series(tree, cont) - orbifold_tree_series(tree, caps)
    return series_comparison(
        f"ccrc/single-edge[{d}]",
        difference,
        single_edge_extra_series(d, caps),
    )
