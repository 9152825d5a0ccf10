from fractions import Fraction
from math import comb
from random import Random

import pytest

from crepant.qfunc import QRational


def random_qrational(rng: Random) -> QRational:
    numer = {
        rng.randint(-3, 5): Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        for _ in range(rng.randint(1, 4))
    }
    return QRational(numer, rng.randint(0, 5))


def test_geometric_core_expansion():
    core = QRational.geometric_core(1)
    assert core.expand(6) == {j: Fraction(j) for j in range(1, 7)}
    core2 = QRational.geometric_core(2)
    assert core2.expand(8) == {
        2 + k: Fraction(comb(k + 3, 3)) for k in range(0, 7)
    }


def test_equality_cross_multiplies():
    a = QRational({1: Fraction(1)}, 2)
    b = QRational({1: Fraction(1), 2: Fraction(-1)}, 3)  # Q(1-Q)/(1-Q)^3
    assert a == b
    assert a.reduced() == a
    assert b.reduced().denom_pow == 2


def test_reduced_cancels_fully():
    # (1 - Q)^2 / (1 - Q)^2 reduces to 1
    numer = {0: Fraction(1), 1: Fraction(-2), 2: Fraction(1)}
    assert QRational(numer, 2).reduced() == QRational.one()


def test_add_and_mul_match_expansions(tmp_path):
    rng = Random(5)
    for _ in range(30):
        a = random_qrational(rng)
        b = random_qrational(rng)
        qmax = 8
        sum_exp = (a + b).expand(qmax)
        expect = dict(a.expand(qmax))
        for j, c in b.expand(qmax).items():
            expect[j] = expect.get(j, Fraction(0)) + c
        assert sum_exp == {j: c for j, c in expect.items() if c}
        prod_exp = (a * b).expand(qmax)
        conv: dict[int, Fraction] = {}
        for i, ci in a.expand(qmax + 9).items():
            for j, cj in b.expand(qmax + 9).items():
                if i + j <= qmax:
                    conv[i + j] = conv.get(i + j, Fraction(0)) + ci * cj
        assert prod_exp == {j: c for j, c in conv.items() if c}


def test_x_derivative_matches_expansion():
    rng = Random(9)
    for _ in range(20):
        a = random_qrational(rng)
        left = a.x_derivative().expand(7)
        right = {j: c * j for j, c in a.expand(7).items() if j}
        assert left == {j: c for j, c in right.items() if c}


def test_shifted():
    a = QRational.geometric_core(1).shifted(-1)
    assert a.expand(5) == {j: Fraction(j + 1) for j in range(0, 6)}


def test_x_antiderivative():
    core = QRational.geometric_core(2)
    anti = core.expand_x_antiderivative(8)
    assert anti == {2 + k: Fraction(comb(k + 3, 3), 2 + k) for k in range(0, 7)}
    with pytest.raises(ValueError):
        QRational.one().expand_x_antiderivative(4)


def test_scalar_multiplication_and_zero():
    a = QRational.geometric_core(1)
    assert (a * 0).is_zero
    assert (Fraction(1, 2) * a).expand(3) == {1: Fraction(1, 2), 2: Fraction(1), 3: Fraction(3, 2)}
    assert (a - a).is_zero
