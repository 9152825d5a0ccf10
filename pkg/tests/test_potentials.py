from fractions import Fraction
from math import factorial

import pytest

from crepant.potentials import (
    OrbifoldLocus,
    ResolutionLocus,
    aut_count,
    one_boundary_orbifold_series,
    open_potential_orbifold,
    open_potential_resolution,
    orbifold_locus_contribution,
    orbifold_locus_series,
    partitions,
    profile_series_orbifold,
    profile_splits,
    psi_integral_genus0,
    resolution_graph_coefficient,
    resolution_locus_contribution,
    resolution_locus_psi_oracle,
    twisted_disk_series,
    winding_profiles,
)
from crepant.series import Caps, Monomial, VarId

Z = VarId.analytic("z")
X = VarId.analytic("x")


def ymono(top=(), bottom=()):
    powers = {}
    for d in top:
        var = VarId.winding("top", d)
        powers[var] = powers.get(var, 0) + 1
    for d in bottom:
        var = VarId.winding("bottom", d)
        powers[var] = powers.get(var, 0) + 1
    return Monomial.build(powers)


def test_aut_count_and_partitions():
    assert aut_count(()) == 1
    assert aut_count((3, 1)) == 1
    assert aut_count((2, 2, 1)) == 2
    assert aut_count((1, 1, 1)) == 6
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(partitions(0)) == [()]


def test_profile_splits():
    splits = set(profile_splits((1, 1)))
    assert splits == {((1, 1), ()), ((1,), (1,)), ((), (1, 1))}
    assert len(list(profile_splits((2, 1)))) == 4


def test_winding_profiles():
    profiles = list(winding_profiles(3, 2))
    assert (1,) in profiles and (2, 1) in profiles and (3,) in profiles
    assert (1, 1, 1) not in profiles  # three boundaries exceed the count cap


def test_psi_integral_values():
    assert psi_integral_genus0((0, 0, 0)) == 1
    assert psi_integral_genus0((1, 0, 0, 0)) == 1
    assert psi_integral_genus0((2, 0, 0, 0, 0)) == 1
    assert psi_integral_genus0((1, 1, 0, 0, 0)) == 2
    assert psi_integral_genus0((0, 0)) == 0
    assert psi_integral_genus0((1, 0, 0)) == 0
    with pytest.raises(ValueError):
        psi_integral_genus0((-1, 0, 0, 0))


def test_locus_validation():
    with pytest.raises(ValueError):
        ResolutionLocus()
    with pytest.raises(ValueError):
        ResolutionLocus(covers=(0,))
    with pytest.raises(ValueError):
        ResolutionLocus(covers=(1,), gamma_prime=True)
    locus = ResolutionLocus(covers=(1, 2), top=(1,), bottom=(2, 2))
    assert locus.covers == (2, 1)
    assert locus.q_degree == 7
    assert locus.aut == 2


def test_resolution_contribution_anchors():
    assert resolution_locus_contribution(ResolutionLocus(covers=(1,))) == -1
    assert resolution_locus_contribution(ResolutionLocus(covers=(2,))) == Fraction(3, 8)
    assert resolution_locus_contribution(ResolutionLocus(covers=(1, 1))) == Fraction(-1, 2)
    assert resolution_locus_contribution(ResolutionLocus(top=(1,), bottom=(1,))) == -1
    assert resolution_locus_contribution(ResolutionLocus(top=(1, 1))) == Fraction(-1, 2)
    for d in range(1, 5):
        single = resolution_locus_contribution(ResolutionLocus(top=(d,)))
        from crepant.vertexedge import central_binomial_half

        assert single == Fraction((-1) ** (d + 1) * central_binomial_half(d), d * d)
        assert resolution_locus_contribution(
            ResolutionLocus(bottom=(d,), gamma_prime=True)
        ) == Fraction(1, d * d)


def test_aspinwall_morrison_resummation():
    for j in range(1, 7):
        total = sum(
            resolution_locus_contribution(ResolutionLocus(covers=c)) for c in partitions(j)
        )
        assert total == Fraction(-1, j ** 3), j


def test_psi_oracle_agrees_with_closed_form():
    checked = 0
    for j in range(0, 5):
        for covers in partitions(j):
            for profile in [(), *winding_profiles(4, 4)]:
                for top, bottom in profile_splits(profile):
                    if len(covers) + len(profile) < 3:
                        continue
                    locus = ResolutionLocus(covers=covers, top=top, bottom=bottom)
                    assert resolution_locus_psi_oracle(locus) == resolution_locus_contribution(
                        locus
                    ), locus
                    checked += 1
    assert checked > 50


def test_psi_oracle_guards():
    with pytest.raises(ValueError):
        resolution_locus_psi_oracle(ResolutionLocus(covers=(1,)))
    with pytest.raises(ValueError):
        resolution_locus_psi_oracle(ResolutionLocus(bottom=(1,), gamma_prime=True))


def test_potential_examples():
    pot = open_potential_resolution(4, 4)
    assert pot.q_coefficient(ymono(top=(1,), bottom=(1,)), 1) == -1
    assert pot.q_coefficient(ymono(top=(1, 1)), 0) == Fraction(-1, 2)
    assert pot.q_coefficient(ymono(bottom=(1,)), 0) == 1
    assert pot.q_coefficient(ymono(top=(1,)), 0) == 1
    assert pot.closed_q_coefficient(2) == Fraction(-1, 8)
    assert pot.cubic_coeff == Fraction(-1, 12)


def test_resolution_route_equivalence_small():
    pot = open_potential_resolution(3, 3)
    qmax = 5
    monos = [Monomial()]
    for profile in winding_profiles(3, 3):
        for top, bottom in profile_splits(profile):
            monos.append(ymono(top, bottom))
    for mono in monos:
        for j in range(0, qmax + 1):
            if not mono.exps and j == 0:
                continue
            assert resolution_graph_coefficient(mono, j) == pot.q_coefficient(mono, j), (
                str(mono),
                j,
            )


def test_orbifold_contribution_anchors():
    assert orbifold_locus_contribution(OrbifoldLocus(0, (1,))) == Fraction(1, 2)
    assert orbifold_locus_contribution(OrbifoldLocus(0, (2,))) == Fraction(1, 8)
    assert orbifold_locus_contribution(OrbifoldLocus(1, (1,))) == Fraction(1, 4)
    assert orbifold_locus_contribution(OrbifoldLocus(1, (2,))) == Fraction(3, 32)
    assert orbifold_locus_contribution(OrbifoldLocus(0, (1, 2))) == Fraction(1, 32)
    assert orbifold_locus_contribution(OrbifoldLocus(2, (1,))) == 0
    assert orbifold_locus_contribution(OrbifoldLocus(4, ())) == Fraction(1, 4)
    assert orbifold_locus_contribution(OrbifoldLocus(6, ())) == Fraction(1, 8)
    assert orbifold_locus_contribution(OrbifoldLocus(3, ())) == 0
    assert orbifold_locus_contribution(OrbifoldLocus(2, ())) == 0


def test_twisted_disk_series_values():
    caps = Caps(order=6, max_winding=4, max_boundary=4, max_degree=0)
    t1 = twisted_disk_series(1, caps)
    assert t1.coefficient(Monomial.build({Z: 1})) == Fraction(1, 4)
    assert t1.coefficient(Monomial.build({Z: 3})) == Fraction(1, 48)
    assert t1.coefficient(Monomial.build({Z: 5})) == Fraction(1, 480)
    full = one_boundary_orbifold_series(1, caps)
    assert full.constant_term() == Fraction(1, 2)


def test_orbifold_route_equivalence_small():
    caps = Caps(order=11, max_winding=3, max_boundary=3, max_degree=0)
    for profile in winding_profiles(3, 3):
        locus_route = orbifold_locus_series(profile, caps)
        if len(profile) == 1:
            closed_route = one_boundary_orbifold_series(profile[0], caps)
        else:
            closed_route = profile_series_orbifold(profile, caps)
        assert locus_route == closed_route, profile


def test_open_potential_orbifold_assembly():
    caps = Caps(order=6, max_winding=2, max_boundary=2, max_degree=0)
    pot = open_potential_orbifold(caps)
    w1 = VarId.winding("orbifold", 1)
    # closed sector z^4 / 96
    assert pot.coefficient(Monomial.build({Z: 4})) == Fraction(1, 96)
    # disk sector: constant 1/2 and z/4 against w1
    assert pot.coefficient(Monomial.build({w1: 1})) == Fraction(1, 2)
    assert pot.coefficient(Monomial.build({w1: 1, Z: 1})) == Fraction(1, 4)
    # two-boundary sector: w1^2 constant is df(1)^2/(2*2*|Aut|) = 1/32
    assert pot.coefficient(Monomial.build({w1: 2})) == Fraction(1, 32)


def test_resolution_potential_series_expansion():
    caps = Caps(order=4, max_winding=2, max_boundary=2, max_degree=3)
    pot = open_potential_resolution(2, 2)
    series = pot.to_series(caps)
    q = VarId.degree("q")
    # cubic term
    assert series.coefficient(Monomial.build({X: 3})) == Fraction(-1, 12)
    # closed sector: -q e^x expands to -q - qx - qx^2/2 ...
    assert series.coefficient(Monomial.build({q: 1})) == -1
    assert series.coefficient(Monomial.build({q: 1, X: 1})) == -1
    assert series.coefficient(Monomial.build({q: 2, X: 1})) == Fraction(-1, 8) * 2
    # one-boundary bottom constant
    yb1 = VarId.winding("bottom", 1)
    assert series.coefficient(Monomial.build({yb1: 1})) == 1
    # mixed profile: y1t y1b Q -> -1
    yt1 = VarId.winding("top", 1)
    assert series.coefficient(Monomial.build({yt1: 1, yb1: 1, q: 1})) == -1


def test_graph_coefficient_input_validation():
    with pytest.raises(ValueError):
        resolution_graph_coefficient(Monomial.build({VarId.degree("q"): 1}), 1)
