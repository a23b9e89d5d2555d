"""Acceptance suite: one test per criterion, one printed verdict line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the verdict lines.
Criterion 8 is split: its decay clause cannot hold at the stated parameter
point (the subradiant channel empties at rate 4*(a1 - a2) ~ 0.041/Gamma0,
so the concurrence is still ~0.22 at tau = 20); that clause is kept as an
expected failure rather than silently weakened.
"""

import math
import time

import numpy as np
import pytest

from unruh_pair import (
    SimConfig,
    build_gkls,
    coefficients,
    concurrence_x,
    default_region_scan,
    evolve,
    from_xstate,
    generation_rate_product,
    initial_product_eg,
    initial_rate_superposition,
    initial_superposition,
    integrate,
    max_concurrence_sweep,
    monotonicity_report,
    numerical_initial_rate,
    rate_sweep,
    spectral_density_cross,
    spectral_density_same,
    steady_state,
    step_bound,
    to_xstate,
)

TWO_PI = 2.0 * math.pi


def _verdict(number, elapsed, budget, description):
    print(f"ACCEPTANCE {number:>2} PASS ({elapsed:6.2f} s < {budget:g} s): {description}")
    assert elapsed < budget


def test_criterion_01_coefficient_identities():
    t0 = time.monotonic()
    alphas = np.logspace(-2, 1.3, 10)
    ells = np.logspace(-1.3, 1.7, 10)
    for alpha in alphas:
        for ell in ells:
            c = coefficients(SimConfig(accel_ratio=float(alpha), separation=float(ell)))
            assert c.b1 == c.gamma0 / 4.0
            assert c.a2 / c.a1 == pytest.approx(c.b2 / c.b1, abs=1e-14)
            lhs = c.f ** 2 + (4.0 * c.d / c.gamma0) ** 2
            rhs = 1.0 / (ell ** 2 * (1.0 + (alpha * ell) ** 2 / 4.0))
            assert lhs == pytest.approx(rhs, rel=1e-12)
    _verdict(1, time.monotonic() - t0, 1.0,
             "coefficient identities on a 10x10 log grid")


def test_criterion_02_kms_detailed_balance():
    t0 = time.monotonic()
    rng = np.random.default_rng(42)
    for _ in range(100):
        lam = float(10.0 ** rng.uniform(-1, 1))
        a = float(10.0 ** rng.uniform(-1, 2))
        ell = float(10.0 ** rng.uniform(-1, 1.5))
        boltzmann = math.exp(-TWO_PI * lam / a)
        same = spectral_density_same(-lam, a)
        assert same == pytest.approx(boltzmann * spectral_density_same(lam, a), rel=1e-12)
        cross = spectral_density_cross(-lam, a, ell)
        assert cross == pytest.approx(
            boltzmann * spectral_density_cross(lam, a, ell), rel=1e-12, abs=1e-300
        )
    _verdict(2, time.monotonic() - t0, 1.0,
             "detailed balance of both spectral densities at 100 random points")


def _xstate_distance(a, b):
    return max(
        abs(a.p_gg - b.p_gg), abs(a.p_ee - b.p_ee), abs(a.p_aa - b.p_aa),
        abs(a.p_ss - b.p_ss), abs(a.c_as - b.c_as), abs(a.c_ge - b.c_ge),
    )


def test_criterion_03_oracle_equivalence():
    t0 = time.monotonic()
    states = (
        initial_product_eg(),
        initial_superposition(math.pi / 6, math.pi / 4),
        initial_superposition(math.pi / 6, -math.pi / 4),
    )
    taus = np.linspace(0.0, 10.0, 20)
    worst = 0.0
    n_points = 0
    for alpha in (0.1, 1.0, 10.0):
        for ell in (0.3, 3.0, 30.0):
            for with_d in (True, False):
                c = coefficients(SimConfig(accel_ratio=alpha, separation=ell,
                                           include_interaction=with_d))
                data = build_gkls(c)
                dt = step_bound(c) / 16.0
                n_points += 1
                for state0 in states:
                    rho = from_xstate(state0)
                    for k in range(1, len(taus)):
                        rho = integrate(rho, data, taus[k] - taus[k - 1], dt)
                        diff = _xstate_distance(
                            to_xstate(rho), evolve(state0, c, float(taus[k]))
                        )
                        worst = max(worst, diff)
                        assert diff < 1e-8
    assert n_points >= 12
    _verdict(3, time.monotonic() - t0, 30.0,
             f"dense integrator matches closed form, {n_points} parameter points "
             f"x 3 states, worst |diff| = {worst:.2e}")


def test_criterion_04_rate_formulas_vs_finite_difference():
    t0 = time.monotonic()
    # product start: closed-form generation rate where it is healthily positive
    checked_product = 0
    for alpha in np.logspace(-1, 0.9, 8):
        for ell in np.logspace(-1.2, 0.3, 6):
            if checked_product >= 20:
                break
            c = coefficients(SimConfig(accel_ratio=float(alpha), separation=float(ell)))
            rate = generation_rate_product(c)
            if rate < 0.02:
                continue
            numeric = numerical_initial_rate(initial_product_eg(), c)
            assert rate == pytest.approx(numeric, abs=1e-6)
            checked_product += 1
    assert checked_product >= 20

    # superposition start: phase-sensitive formula, enhancement points
    theta, phi = math.pi / 6, -math.pi / 4
    state0 = initial_superposition(theta, phi)
    checked_sup = 0
    for alpha in np.logspace(-1, 1, 8):
        for ell in np.logspace(-1.3, -0.2, 6):
            if checked_sup >= 20:
                break
            c = coefficients(SimConfig(accel_ratio=float(alpha), separation=float(ell)))
            rate = initial_rate_superposition(c, theta, phi)
            if rate < 0.02:
                continue
            numeric = numerical_initial_rate(state0, c)
            assert rate == pytest.approx(numeric, abs=1e-6)
            checked_sup += 1
    assert checked_sup >= 20
    _verdict(4, time.monotonic() - t0, 5.0,
             f"closed-form rates match finite differences at {checked_product}+"
             f"{checked_sup} positive-rate points (phase convention frozen)")


def test_criterion_05_region_superset():
    t0 = time.monotonic()
    mask = default_region_scan(300)
    on = int(mask.with_interaction.sum())
    off = int(mask.without_interaction.sum())
    assert not np.any(mask.without_interaction & ~mask.with_interaction)
    assert on >= math.ceil(1.01 * off)
    _verdict(5, time.monotonic() - t0, 5.0,
             f"exchange enlarges the generation region on 300x300 "
             f"({on} vs {off} nodes, +{100.0 * (on - off) / off:.1f}%)")


@pytest.fixture(scope="module")
def maxc_curves_fixed_separation():
    """Fig-5-style curves: max concurrence vs acceleration at three separations."""
    return {
        ell: max_concurrence_sweep("separation", ell, sweep_range=(0.05, 20.0),
                                   resolution=60)
        for ell in (0.3, 3.0, 30.0)
    }


def test_criterion_06_anti_unruh_disappears(maxc_curves_fixed_separation):
    t0 = time.monotonic()
    rate_kinds = {}
    for ell in (0.3, 3.0, 30.0):
        sweep = rate_sweep("separation", ell, sweep_range=(0.05, 20.0), resolution=60)
        rep = monotonicity_report(sweep)
        assert rep.with_interaction.kind == "monotone-decreasing"
        rate_kinds[ell] = rep.without_interaction.kind
    assert rate_kinds[3.0] == "non-monotone"
    assert rate_kinds[30.0] == "non-monotone"

    maxc_off_kinds = []
    for ell, sweep in maxc_curves_fixed_separation.items():
        rep = monotonicity_report(sweep)
        assert rep.with_interaction.kind == "monotone-decreasing"
        maxc_off_kinds.append(rep.without_interaction.kind)
    assert "non-monotone" in maxc_off_kinds
    _verdict(6, time.monotonic() - t0, 60.0,
             "exchange-on curves decrease monotonically with acceleration; "
             "exchange-off curves do not")


def test_criterion_07_maximum_dominance(maxc_curves_fixed_separation):
    t0 = time.monotonic()
    nodes = 0
    for sweep in maxc_curves_fixed_separation.values():
        assert np.all(sweep.with_interaction >= sweep.without_interaction - 1e-9)
        nodes += len(sweep.values)
    for alpha in (0.1, 1.0, 10.0):  # Fig-6-style curves vs separation
        sweep = max_concurrence_sweep("accel_ratio", alpha,
                                      sweep_range=(0.05, 50.0), resolution=60)
        assert np.all(sweep.with_interaction >= sweep.without_interaction - 1e-9)
        nodes += len(sweep.values)
    _verdict(7, time.monotonic() - t0, 60.0,
             f"max concurrence with exchange dominates at all {nodes} nodes")


def _fig4_curves():
    taus = np.linspace(0.0, 20.0, 4001)
    curves = {}
    for with_d in (True, False):
        c = coefficients(SimConfig(accel_ratio=0.1, separation=0.5,
                                   include_interaction=with_d))
        s0 = initial_product_eg()
        curves[with_d] = (
            c, np.array([concurrence_x(evolve(s0, c, float(t))).c for t in taus])
        )
    return taus, curves


def _interior_maxima(values):
    return [
        k for k in range(1, len(values) - 1)
        if values[k] > values[k - 1] and values[k] >= values[k + 1] and values[k] > 1e-9
    ]


def test_criterion_08_time_evolution_shape():
    t0 = time.monotonic()
    taus, curves = _fig4_curves()
    c_on, curve_on = curves[True]
    c_off, curve_off = curves[False]
    for curve in (curve_on, curve_off):
        assert curve[0] == 0.0
        peak = int(np.argmax(curve))
        assert 0 < peak < len(curve) - 1 and curve[peak] > 0.1
        assert curve[-1] < curve[peak]  # decaying past the maximum
    # the exchange phase writes extra oscillation extrema into the curve
    assert len(_interior_maxima(curve_on)) > len(_interior_maxima(curve_off))
    # asymptotics do not feel the exchange at all
    from unruh_pair import asymptotic_concurrence
    assert abs(asymptotic_concurrence(c_on) - asymptotic_concurrence(c_off)) <= 1e-10
    _verdict(8, time.monotonic() - t0, 2.0,
             "concurrence rises from 0 to a positive maximum; exchange adds "
             "an oscillation extremum; asymptotics agree (decay clause: see xfail)")


@pytest.mark.xfail(
    strict=True,
    reason="subradiant decay 4*(a1-a2) = 0.0415/Gamma0 at (a/w = 0.1, wL = 0.5) "
    "leaves C(20/Gamma0) ~ 0.22; C < 1e-6 is first reached near tau ~ 316/Gamma0, "
    "so the stated horizon cannot satisfy this clause",
)
def test_criterion_08_decay_clause():
    c = coefficients(SimConfig(accel_ratio=0.1, separation=0.5))
    end = concurrence_x(evolve(initial_product_eg(), c, 20.0)).c
    print(f"ACCEPTANCE  8 decay clause: C(tau=20) = {end:.4f}, required < 1e-6 -> FAIL")
    assert end < 1e-6


def test_criterion_09_degradation_to_enhancement_flip():
    t0 = time.monotonic()
    theta, phi = math.pi / 6, -math.pi / 4
    state0 = initial_superposition(theta, phi)
    point = dict(accel_ratio=0.5, separation=0.3)
    on = coefficients(SimConfig(**point))
    off = coefficients(SimConfig(**point, include_interaction=False))
    rate_off = initial_rate_superposition(off, theta, phi)
    rate_on = initial_rate_superposition(on, theta, phi)
    assert rate_off < 0.0 < rate_on
    # both routes agree on the flip
    assert numerical_initial_rate(state0, off) < 0.0 < numerical_initial_rate(state0, on)
    _verdict(9, time.monotonic() - t0, 1.0,
             f"C'(0) flips from {rate_off:.3f} to +{rate_on:.3f} when the "
             "exchange is kept")


def test_criterion_10_steady_state_gibbs():
    t0 = time.monotonic()
    from unruh_pair import diagonal_generator
    for alpha in (0.2, 1.0, 5.0):
        r = math.exp(-TWO_PI / alpha)
        z = (1.0 + r) ** 2
        expected = np.array([1.0, r * r, r, r]) / z  # (gg, ee, aa, ss)
        for ell in (0.3, 3.0):
            c = coefficients(SimConfig(accel_ratio=alpha, separation=ell))
            got = steady_state(c).populations
            assert got == pytest.approx(expected, abs=1e-10)
            # independent oracle: plain linear solve with a normalization row
            m = diagonal_generator(c).matrix.copy()
            m[0, :] = 1.0
            ref = np.linalg.solve(m, np.array([1.0, 0.0, 0.0, 0.0]))
            assert got == pytest.approx(ref, abs=1e-10)
    _verdict(10, time.monotonic() - t0, 1.0,
             "steady populations equal the thermal form (1, r, r, r^2)/(1+r)^2 "
             "over (G, A, S, E)")
