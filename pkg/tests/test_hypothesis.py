import math

import numpy as np
import pytest

from beurling import (
    PrimeSystemSpec,
    build_table_from_system,
    chebyshev_verdict,
    l1_condition,
    little_o_trend,
    materialize,
    omega_lemma_check,
    tail_sup,
    zhang_condition,
)
from beurling.hypothesis import (
    CONSISTENT,
    CONVERGENT,
    DIVERGENT,
    VIOLATED,
)
from conftest import diamond_partial_naturals


def table_for(values, bound, a=None):
    seq = materialize(PrimeSystemSpec.explicit(values), bound)
    return build_table_from_system(seq, bound, a)


@pytest.fixture(scope="module")
def rational_2000():
    seq = materialize(PrimeSystemSpec.rational(1.0), 2000.0)
    return build_table_from_system(seq, 2000.0, 1.0)


# --- L1 condition ---

def test_l1_partials_match_closed_form(rational_2000):
    # for the ordinary integers with a = 1 the partial up to an integer X is
    # sum_{n<X} (log(1 + 1/n) - 1/(n+1)), computable independently
    checkpoints = [10, 100, 500, 1000]
    rep = l1_condition(rational_2000, checkpoints=checkpoints)
    for (x, p), x_int in zip(rep.checkpoints, checkpoints):
        assert x == x_int
        assert p == pytest.approx(diamond_partial_naturals(x_int), abs=1e-12)
    assert rep.exact


def test_l1_rational_convergent(rational_2000):
    rep = l1_condition(rational_2000)
    assert rep.verdict == CONVERGENT
    # total stays below the limit 1 - gamma
    assert rep.checkpoints[-1][1] < 1 - 0.5772156649015329


def test_l1_degenerate_unit_only():
    # N = 1 on [1, B), a = 1: integral_1^B (x-1)/x^2 ... with B = e the
    # partial is exactly 1/e (|1 - x|/x^2 integrates to log x + 1/x - 1)
    seq = materialize(PrimeSystemSpec.explicit([7.0]), math.e)
    t = build_table_from_system(seq, math.e, 1.0)
    rep = l1_condition(t, checkpoints=[math.e])
    assert rep.checkpoints[0][1] == pytest.approx(1.0 / math.e, abs=1e-12)


def test_l1_single_prime_divergent():
    seq = materialize(PrimeSystemSpec.single(2.0), 2.0**20)
    t = build_table_from_system(seq, 2.0**20, 1.0)
    rep = l1_condition(t)
    assert rep.verdict == DIVERGENT
    # N grows like log x so |N - x|/x^2 ~ 1/x and partials grow by ~log 10
    # per decade
    assert rep.tail_estimate > 1.0


def test_l1_partials_non_decreasing(rational_2000):
    rep = l1_condition(rational_2000)
    ps = [p for _, p in rep.checkpoints]
    assert all(b >= a for a, b in zip(ps, ps[1:]))


def test_l1_requires_density():
    t = table_for([2.0], 8.0)
    with pytest.raises(ValueError):
        l1_condition(t)
    with pytest.raises(ValueError):
        l1_condition(t, a=-1.0)


# --- Zhang tail-sup condition ---

def test_tail_sup_bound_on_naturals(rational_2000):
    # |N(t) - t| <= 1 for the ordinary integers, so S(x) <= 1/x
    xs = np.geomspace(2.0, 2000.0, 50)
    s = tail_sup(rational_2000, None, xs)
    assert np.all(s <= 1.0 / xs + 1e-12)
    assert np.all(s >= 0)


def test_tail_sup_non_increasing(rational_2000, rng):
    xs = np.sort(rng.uniform(1.0, 2000.0, 200))
    s = tail_sup(rational_2000, None, xs)
    assert np.all(np.diff(s) <= 1e-15)


def test_zhang_dominates_l1(rational_2000):
    # S(x)/x >= |N(x) - ax|/x^2 pointwise, so partials dominate too
    checkpoints = np.geomspace(2.0, 2000.0, 24)
    l1 = l1_condition(rational_2000, checkpoints=checkpoints)
    zh = zhang_condition(rational_2000, checkpoints=checkpoints)
    for (_, pl), (_, pz) in zip(l1.checkpoints, zh.checkpoints):
        assert pz >= pl - 1e-12


def test_zhang_rational_convergent(rational_2000):
    rep = zhang_condition(rational_2000)
    assert rep.verdict == CONVERGENT
    assert any("truncated" in c for c in rep.caveats)


def test_zhang_single_prime_divergent():
    seq = materialize(PrimeSystemSpec.single(2.0), 2.0**20)
    t = build_table_from_system(seq, 2.0**20, 1.0)
    assert zhang_condition(t).verdict == DIVERGENT


def test_zhang_partial_matches_quadrature(rational_2000):
    # independent check of the piecewise closed form by brute quadrature
    xs = np.geomspace(1.0001, 50.0, 20001)
    s = tail_sup(rational_2000, None, xs)
    quad = np.trapezoid(s, np.log(xs))  # integral of S(e^u) du
    rep = zhang_condition(rational_2000, checkpoints=[50.0])
    assert rep.checkpoints[0][1] == pytest.approx(float(quad), abs=5e-3)
    # and against a hand sum for the ordinary integers, where S = 1/(n+1)
    # on [n, n+1) below 50
    hand = sum(math.log(1 + 1 / n) / (n + 1) for n in range(1, 50))
    assert rep.checkpoints[0][1] == pytest.approx(hand, abs=1e-12)


# --- little-o trend ---

def test_trend_rational_consistent(rational_2000):
    rep = little_o_trend(rational_2000)
    assert rep.verdict == CONSISTENT
    assert len(rep.sample_x) == len(rep.sample_d)
    # D(x) <= log(x)/x for the ordinary integers
    assert np.all(rep.sample_d <= np.log(np.maximum(rep.sample_x, 1.0)) / rep.sample_x + 1e-12)


def test_trend_single_prime_violated():
    seq = materialize(PrimeSystemSpec.single(2.0), 2.0**20)
    t = build_table_from_system(seq, 2.0**20, 1.0)
    assert little_o_trend(t).verdict == VIOLATED


def test_trend_wrong_density_violated(rational_2000):
    # a = 2 makes |N - ax|/x tend to 1, so D grows like log x
    rep = little_o_trend(rational_2000, a=2.0)
    assert rep.verdict == VIOLATED


def test_trend_window_sups_cover_jump_limits(rational_2000):
    rep = little_o_trend(rational_2000)
    for lo, hi, sup in rep.window_sups:
        mask = (rep.sample_x > lo) & (rep.sample_x <= hi)
        if np.any(mask):
            assert sup >= np.max(rep.sample_d[mask]) - 1e-12


# --- omega lemma ---

def test_omega_convergent_decaying():
    # omega(x) = 1/log^2(e x): integral_1^X omega/x dx = 1 - 1/(1 + log X)
    rep = omega_lemma_check(lambda x: 1.0 / np.log(np.e * x) ** 2, 1e8,
                            checkpoints=[10.0, 1e4, 1e8])
    for x, p in rep.checkpoints:
        assert p == pytest.approx(1.0 - 1.0 / (1.0 + math.log(x)), rel=1e-5)
    assert rep.verdict == CONVERGENT
    assert rep.decaying
    assert not rep.contradiction


def test_omega_constant_divergent():
    rep = omega_lemma_check(lambda x: np.full_like(np.asarray(x, dtype=float), 0.5), 1e8)
    assert rep.verdict == DIVERGENT
    assert not rep.decaying
    assert not rep.contradiction


def test_omega_slow_decay_not_convergent():
    # 1/log(e x) integrates to log(1 + log X): divergent, but the per-decade
    # increments shrink, so the decade heuristic stays short of a divergence
    # call; it must not claim convergence either
    rep = omega_lemma_check(lambda x: 1.0 / np.log(np.e * x), 1e8)
    assert rep.verdict != CONVERGENT
    assert not rep.contradiction


def test_omega_zero():
    rep = omega_lemma_check(lambda x: np.zeros_like(np.asarray(x, dtype=float)), 1e4)
    assert rep.verdict == CONVERGENT
    assert rep.checkpoints[-1][1] == 0.0


def test_omega_rejects_bad_inputs():
    with pytest.raises(ValueError):
        omega_lemma_check(np.log, 1e4)  # increasing
    with pytest.raises(ValueError):
        omega_lemma_check(lambda x: -1.0 / x, 1e4)  # negative
    with pytest.raises(ValueError):
        omega_lemma_check(lambda x: 1.0 / x, 0.5)  # bad range


# --- Chebyshev window ---

def test_chebyshev_rational(rational_2000):
    rep = chebyshev_verdict(rational_2000, 100.0, 2000.0)
    assert 0.8 < rep.ratio_min < rep.ratio_max < 1.2
    assert rep.grid_size > 2


def test_chebyshev_single_prime_degenerate():
    seq = materialize(PrimeSystemSpec.single(2.0), 2.0**20)
    t = build_table_from_system(seq, 2.0**20, 1.0)
    rep = chebyshev_verdict(t, 2.0**10, 2.0**20)
    # psi(x) ~ log x so psi/x -> 0
    assert rep.ratio_min < 1e-3
    assert rep.ratio_max < 0.05


def test_chebyshev_exact_on_tiny_window():
    # {2} below 16: psi jumps at 2, 4, 8; on [3, 7] the extrema are explicit
    t = table_for([2.0], 16.0)
    rep = chebyshev_verdict(t, 3.0, 7.0)
    l2 = math.log(2)
    assert rep.ratio_max == pytest.approx(2 * l2 / 4.0, abs=1e-14)
    assert rep.ratio_min == pytest.approx(l2 / 4.0, abs=1e-14)


def test_chebyshev_nested_windows(rational_2000):
    inner = chebyshev_verdict(rational_2000, 200.0, 1000.0)
    outer = chebyshev_verdict(rational_2000, 100.0, 2000.0)
    assert outer.ratio_min <= inner.ratio_min
    assert outer.ratio_max >= inner.ratio_max


def test_chebyshev_errors(rational_2000):
    with pytest.raises(ValueError):
        chebyshev_verdict(rational_2000, 100.0, 50.0)
    with pytest.raises(ValueError):
        chebyshev_verdict(rational_2000, 0.5, 100.0)
    with pytest.raises(ValueError):
        chebyshev_verdict(rational_2000, 100.0, 5000.0)


# --- determinism ---

def test_reports_deterministic(rational_2000):
    r1 = l1_condition(rational_2000).to_dict()
    r2 = l1_condition(rational_2000).to_dict()
    assert r1 == r2
    z1 = zhang_condition(rational_2000).to_dict()
    z2 = zhang_condition(rational_2000).to_dict()
    assert z1 == z2
