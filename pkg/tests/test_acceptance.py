"""Acceptance gate: every advertised identity at its target scale.

Each test prints one pass/fail line so a plain run reads as a checklist.
All comparisons are exact; the only tolerances here are wall-clock budgets.
"""

import time
from random import Random

import pytest

from crepant.checks import (
    DEFAULT_SEED,
    check_gluing,
    check_orb_gluing,
    check_routes,
    check_tphi,
)
from crepant.crc import verify_closed_crc, verify_open_crc
from crepant.report import all_passed
from crepant.series import Caps, TruncSeries
from crepant.vertexedge import g_lemma_coefficient, g_power_row, g_power_table

from util_series import (
    Z,
    random_nilpotent_series,
    random_one_series,
    random_series,
    random_unit_series,
)

# The first ten coefficients of the first ten powers of the disk-counting
# series, frozen from an independent hand computation of the recurrence.
EXPECTED_TABLE = [
    [1, 1, -1, 2, -5, 14, -42, 132, -429, 1430],
    [1, 2, -1, 2, -5, 14, -42, 132, -429, 1430],
    [1, 3, 0, 1, -3, 9, -28, 90, -297, 1001],
    [1, 4, 2, 0, -1, 4, -14, 48, -165, 572],
    [1, 5, 5, 0, 0, 1, -5, 20, -75, 275],
    [1, 6, 9, 2, 0, 0, -1, 6, -27, 110],
    [1, 7, 14, 7, 0, 0, 0, 1, -7, 35],
    [1, 8, 20, 16, 2, 0, 0, 0, -1, 8],
    [1, 9, 27, 30, 9, 0, 0, 0, 0, 1],
    [1, 10, 35, 50, 25, 2, 0, 0, 0, 0],
]


def report(num: int, title: str, ok: bool) -> None:
    print(f"[{num:2d}] {title}: {'PASS' if ok else 'FAIL'}")
    assert ok, title


@pytest.fixture(scope="module")
def routes():
    start = time.perf_counter()
    results = check_routes(max_winding=4, max_boundary=4, order=12, degree=6)
    return results, time.perf_counter() - start


def test_01_coefficient_table():
    start = time.perf_counter()
    table = g_power_table(10, 9)
    elapsed = time.perf_counter() - start
    report(1, f"100-entry coefficient table in {elapsed:.3f}s", table == EXPECTED_TABLE and elapsed < 1.0)


def test_02_hodge_recursion_vs_closed_form():
    start = time.perf_counter()
    results = check_tphi(max_genus=5)
    elapsed = time.perf_counter() - start
    ok = len(results) > 400 and all_passed(results) and elapsed < 60.0
    report(2, f"Hodge recursion vs closed form, {len(results)} cases in {elapsed:.2f}s", ok)


def test_03_edge_cover_lemma_grid():
    ok = True
    for total in range(11):
        for k in range(total + 1):
            d = total - k
            if d == 0 and k == 0:
                continue
            ok = ok and g_power_row(2 * total, k)[k] == g_lemma_coefficient(d, k)
    ok = ok and all(g_lemma_coefficient(0, k) == 2 for k in range(1, 11))
    report(3, "edge-cover coefficients vs power grid, d+k <= 10", ok)


def test_04_resolution_route_equivalence(routes):
    results, elapsed = routes
    rows = [r for r in results if r.check == "routes/resolution"]
    ok = len(rows) > 100 and all(r.passed for r in rows) and elapsed < 60.0
    report(4, f"resolution chart routes, {len(rows)} coefficients in {elapsed:.2f}s", ok)


def test_05_orbifold_route_equivalence(routes):
    results, _ = routes
    rows = [r for r in results if r.check.startswith("routes/orbifold")]
    profiles = {r.check for r in rows}
    ok = len(rows) > 50 and all(r.passed for r in rows) and "routes/orbifold-closed" in profiles
    report(5, f"orbifold chart routes, {len(rows)} coefficients", ok)


def test_06_smooth_gluing_sweep():
    results = check_gluing(max_d=5, max_k=4, samples=10, seed=DEFAULT_SEED)
    names = {r.check for r in results}
    same = [r for r in results if r.check == "gluing/same-orientation"]
    anchor = [r for r in results if r.check == "gluing/anchor"]
    ok = (
        all_passed(results)
        and len(same) == 250
        and "gluing/opposite-orientation" in names
        and anchor and anchor[0].lhs == "25/8"
    )
    report(6, f"smooth gluing sweep, {len(results)} identities", ok)


def test_07_orbifold_gluing_sweep():
    results = check_orb_gluing(max_d=8)
    by_label = {(r.check, r.monomial): r for r in results}
    ok = (
        all_passed(results)
        and by_label["orb-gluing/anchor", "d=1 twisted"].lhs == "1/8"
        and by_label["orb-gluing/anchor", "d=1 untwisted"].lhs == "1/2"
        and sum(r.check == "orb-gluing/twisted" for r in results) == 8
        and sum(r.check == "orb-gluing/untwisted" for r in results) == 8
    )
    report(7, f"orbifold gluing sweep, {len(results)} identities", ok)


def test_08_open_continuation():
    start = time.perf_counter()
    results = verify_open_crc(max_winding=4, max_boundary=4, order=12)
    elapsed = time.perf_counter() - start
    ok = all_passed(results) and elapsed < 120.0
    report(8, f"open-sector continuation, {len(results)} coefficients in {elapsed:.2f}s", ok)


def test_09_closed_continuation():
    start = time.perf_counter()
    results = verify_closed_crc(max_edges=4, max_label=3, order=8, max_degree=6)
    elapsed = time.perf_counter() - start
    families = {r.check.split("[")[0] for r in results}
    ok = (
        all_passed(results)
        and elapsed < 300.0
        and {"ccrc/v1-chosen", "ccrc/v2-chosen", "ccrc/edge-chosen", "ccrc/single-edge"} <= families
    )
    report(9, f"closed-sector continuation, {len(results)} coefficients in {elapsed:.2f}s", ok)


def test_10_series_round_trips():
    caps = Caps(order=8, max_winding=4, max_boundary=4, max_degree=4)
    # antiderivatives raise the analytic power, so draw those samples one
    # order lower to keep the round trip inside the truncation
    inner = Caps(order=caps.order - 1, max_winding=4, max_boundary=4, max_degree=4)
    rng = Random(20240825)
    one = TruncSeries.one(caps, Z)
    built = 0
    ok = True
    for _ in range(50):
        u = random_unit_series(rng, caps)
        ok = ok and u.inverse().inverse() == u and u * u.inverse() == one
        s = random_one_series(rng, caps)
        ok = ok and s.log().exp() == s
        n = random_nilpotent_series(rng, caps)
        ok = ok and n.exp().log() == n
        p = TruncSeries(caps, random_series(rng, inner).coeffs, Z)
        ok = ok and p.antiderivative().derivative() == p
        built += 4
    report(10, f"series round-trips on {built} random series", ok and built == 200)
