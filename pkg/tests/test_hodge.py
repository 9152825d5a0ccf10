from fractions import Fraction
from math import factorial

import pytest

from crepant.hodge import (
    X_VAR,
    closed_orbifold_series,
    hodge_closed_form,
    hodge_generating_series,
    hodge_recursion,
    multinomial,
    _recursion_step,
)
from crepant.series import Caps, Monomial, VarId

CAPS = Caps(order=13, max_winding=0, max_boundary=0, max_degree=0)


def xcoeff(series, k):
    return series.coefficient(Monomial.build({X_VAR: k})).real_part()


def test_multinomial():
    assert multinomial(()) == 1
    assert multinomial((3,)) == 1
    assert multinomial((1, 1)) == 2
    assert multinomial((1, 1, 1, 1)) == 24
    assert multinomial((2, 1)) == 3
    assert multinomial((1, 0, 0)) == 1


def test_closed_form_known_values():
    assert hodge_closed_form(1, 1) == Fraction(1, 4)
    assert hodge_closed_form(2, 1) == Fraction(1, 8)
    assert hodge_closed_form(3, 1) == Fraction(1, 4)
    assert hodge_closed_form(4, 1) == Fraction(17, 16)
    assert hodge_closed_form(2, 2, (1,)) == Fraction(3, 8)
    assert hodge_closed_form(3, 2, (1,)) == Fraction(15, 16)
    assert hodge_closed_form(4, 2, (1,)) == Fraction(147, 32)
    assert hodge_closed_form(3, 3, (1, 1)) == Fraction(15, 8)
    assert hodge_closed_form(5, 5, (1, 1, 1, 1)) == Fraction(2835, 8)


def test_inadmissible_data_vanishes():
    assert hodge_closed_form(0, 1) == 0
    assert hodge_closed_form(2, 2, (2,)) == 0  # psi degree does not match i - 1
    assert hodge_closed_form(1, 2, (1, 0, 0, 0, 0)) == 0  # too many markings
    assert hodge_closed_form(2, 3, (1, 1)) == 0  # i > g forces a zero coefficient
    assert hodge_recursion(2, 2, (2,)) == 0
    assert hodge_recursion(1, 2, (1, 0, 0, 0, 0)) == 0
    with pytest.raises(ValueError):
        hodge_closed_form(2, 2, (-1,))


def test_zero_padding_is_immaterial():
    assert hodge_closed_form(2, 2, (1, 0, 0)) == hodge_closed_form(2, 2, (1,))
    assert hodge_recursion(3, 3, (0, 1, 0, 1)) == hodge_recursion(3, 3, (1, 1))


def test_recursion_matches_closed_form_small():
    for g in range(1, 5):
        for i in range(1, g + 1):
            for powers in [(i - 1,), (i - 2, 1) if i >= 2 else None, (1,) * (i - 1)]:
                if powers is None or sum(powers) != i - 1 or min(powers, default=0) < 0:
                    continue
                assert hodge_recursion(g, i, powers) == hodge_closed_form(g, i, powers), (
                    g,
                    i,
                    powers,
                )


def test_recursion_nontrivial_values():
    assert hodge_recursion(3, 3, (1, 1)) == Fraction(15, 8)
    assert hodge_recursion(5, 5, (1, 1, 1, 1)) == Fraction(2835, 8)


def test_peeling_designation_is_immaterial():
    # same multiset {2, 1, 0}, three arrangements with a positive peeled entry
    v1 = _recursion_step(4, 4, (2, 1, 0))
    v2 = _recursion_step(4, 4, (2, 0, 1))
    v3 = _recursion_step(4, 4, (1, 2, 0))
    assert v1 == v2 == v3 == hodge_closed_form(4, 4, (2, 1))
    with pytest.raises(ValueError):
        _recursion_step(4, 4, (0, 2, 1))


def test_generating_series_resums_hodge_values():
    for windings in [(1,), (2,), (1, 1), (2, 1)]:
        series = hodge_generating_series(windings, CAPS)
        n = len(windings)
        for g in range(1, 5):
            resum = Fraction(0)
            # sum over chern degree i and ordered psi assignments of total i - 1
            for i in range(1, g + 1):
                for assign in _compositions(i - 1, n):
                    term = hodge_closed_form(g, i, assign)
                    for d, j in zip(windings, assign):
                        term *= Fraction(d) ** j
                    resum += term
            assert resum == factorial(2 * g) * xcoeff(series, 2 * g), (windings, g)


def _compositions(total, parts):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)


def test_generating_series_validation():
    with pytest.raises(ValueError):
        hodge_generating_series((), CAPS)
    with pytest.raises(ValueError):
        hodge_generating_series((0,), CAPS)


def test_closed_orbifold_series():
    caps = Caps(order=10, max_winding=0, max_boundary=0, max_degree=0)
    z = VarId.analytic("z")
    h = closed_orbifold_series(caps, z)

    def zc(k):
        return h.coefficient(Monomial.build({z: k})).real_part()

    assert zc(0) == 0 and zc(1) == 0 and zc(2) == 0 and zc(3) == 0
    assert zc(4) == Fraction(1, 96)
    assert zc(6) == Fraction(1, 5760)
    assert zc(8) == Fraction(1, 161280)
