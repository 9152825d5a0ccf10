"""Shared helpers for building random exact series in tests."""

from fractions import Fraction
from random import Random

from crepant.gauss import GAUSS_ONE, GaussRat
from crepant.series import Caps, Monomial, TruncSeries, VarId

Z = VarId.analytic("z")
VAR_POOL = [
    Z,
    VarId.degree("q"),
    VarId.degree("P"),
    VarId.winding("orbifold", 1),
    VarId.winding("orbifold", 2),
    VarId.winding("top", 1),
]


def random_gauss(rng: Random, allow_zero: bool = True) -> GaussRat:
    def part() -> Fraction:
        return Fraction(rng.randint(-9, 9), rng.randint(1, 9))

    value = GaussRat(part(), part())
    if not allow_zero:
        while value.is_zero:
            value = GaussRat(part(), part())
    return value


def random_monomial(rng: Random, caps: Caps) -> Monomial:
    while True:
        powers = {}
        for var in rng.sample(VAR_POOL, rng.randint(0, 3)):
            if var.kind == "analytic":
                powers[var] = rng.randint(0, caps.order - 1)
            else:
                powers[var] = rng.randint(0, 2)
        mono = Monomial.build(powers)
        if caps.admits(mono):
            return mono


def random_series(rng: Random, caps: Caps, terms: int = 5) -> TruncSeries:
    coeffs = {}
    for _ in range(rng.randint(1, terms)):
        coeffs[random_monomial(rng, caps)] = random_gauss(rng)
    return TruncSeries(caps, coeffs, Z)


def with_constant(series: TruncSeries, value) -> TruncSeries:
    """Force the constant coefficient of ``series`` to ``value``."""
    shifted = series - series.constant_term()
    if value == 0:
        return shifted
    return shifted + TruncSeries.constant(series.caps, value, series.analytic)


def random_unit_series(rng: Random, caps: Caps) -> TruncSeries:
    return with_constant(random_series(rng, caps), random_gauss(rng, allow_zero=False))


def random_one_series(rng: Random, caps: Caps) -> TruncSeries:
    return with_constant(random_series(rng, caps), GAUSS_ONE)


def random_nilpotent_series(rng: Random, caps: Caps) -> TruncSeries:
    return with_constant(random_series(rng, caps), 0)
