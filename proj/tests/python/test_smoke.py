import math

import pytest

import quench as q


def md(h1, h2, L):
    return q.mode_data(q.QuenchSpec(h1, h2, L))


def test_mode_data_shapes():
    m = md(0.3, 1.4, 18)
    assert len(m.ks) == 9
    assert len(m.alpha) == 9
    assert all(0.0 <= a <= 1.0 for a in m.alpha)
    assert all(l > 0.0 for l in m.lambda2)


def test_echo_basics():
    m = md(0.3, 1.4, 18)
    assert q.loschmidt(m, 0.0) == 1.0
    v = q.loschmidt(m, 7.3)
    assert 0.0 < v <= 1.0
    assert math.isclose(q.loschmidt_log(m, 7.3), math.log(v), rel_tol=1e-12)


def test_echo_against_oracle():
    m = md(0.3, 1.4, 12)
    ens = q.enumerate_states(m)
    for t in (0.0, 1.0, 5.5, 20.0):
        assert abs(q.loschmidt(m, t) - q.brute_echo(ens, t)) < 1e-10


def test_mean_identity():
    m = md(0.3, 1.4, 18)
    ens = q.enumerate_states(m)
    assert abs(math.exp(q.mean_echo_log(m)) - q.power_sum(ens, 1)) < 1e-12


def test_moments_and_bound():
    m = md(0.99, 1.01, 40)
    assert q.exact_moment_log(m, 1) == pytest.approx(q.mean_echo_log(m))
    mu2 = math.exp(q.exact_moment_log(m, 2))
    assert mu2 - math.exp(2 * q.mean_echo_log(m)) == pytest.approx(
        q.exact_variance(m), rel=1e-9
    )
    assert q.moment_bound_check(m, 6).holds
    assert q.derangement_count(4) == 9
    assert q.g0_coefficient(2, 1.0) == pytest.approx(-0.625)


def test_spectral_measure_and_revival():
    m = md(1.0, 1.001, 100)
    sm = q.spectral_measure(m)
    total = sum(a.weight for a in sm.atoms) + sm.discarded_mass
    assert total == pytest.approx(1.0, abs=1e-10)
    assert abs(q.revival_time(sm) - 100.0) / 100.0 < 0.05
    t = 12.34
    assert abs(q.reconstruct(sm, t) - q.loschmidt(m, t)) < 1e-8


def test_regimes():
    assert q.classify_regime(q.QuenchSpec(0.3, 1.4, 18)) == q.Regime.Exponential
    assert q.classify_regime(q.QuenchSpec(0.1, 0.11, 20)) == q.Regime.Gaussian
    assert q.classify_regime(q.QuenchSpec(0.99, 1.01, 40)) == q.Regime.BatmanHood
    assert q.classify_regime(q.QuenchSpec(0.5, 0.5, 20)) == q.Regime.Degenerate


def test_distribution_pipeline():
    m = md(0.99, 1.01, 40)
    samples = q.sample_echo(m, 1e5, 20000, 7)
    hist = q.histogram(samples, 50)
    assert sum(hist.counts) == hist.n_samples == 20000
    bp = q.batman_params(q.spectral_measure(m), q.mean_echo_log(m))
    assert bp.A >= bp.B > 0.0
    val = q.batman_density(bp, bp.mean)
    assert val > 0.0


def test_thermo():
    assert q.s_of_t(1.3, 2.0, 0.0) == pytest.approx(0.0, abs=1e-12)
    a = q.thermo_asymptotics(1.3, 2.0)
    assert a.E_m == pytest.approx(2.0)
    assert a.E_M == pytest.approx(6.0)
    assert a.A_m == pytest.approx(0.06787559631829931, rel=1e-12)
    sid = q.series_identity_check(0.5)
    assert sid.lhs == pytest.approx(sid.rhs, abs=1e-12)
    with pytest.raises(ValueError):
        q.relaxation_time(md(0.5, 0.5, 10))


def test_magnetization():
    spec = q.QuenchSpec(0.9, 0.9, 40)
    m0 = q.magnetization(spec, 0.0)
    assert q.magnetization(spec, 11.0) == pytest.approx(m0, rel=1e-12)
