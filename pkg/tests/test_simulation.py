import numpy as np
import pytest
from scipy import stats

from pipecorr import (
    PowerLawRate,
    count_at,
    cumulative_intensity,
    estimator_study,
    fit_mle,
    simulate_first_m,
    simulate_records_from_iid,
    survival,
    time_rescaling_increments,
)


RATE = PowerLawRate(1.2, 0.17)


class TestDeterminism:
    def test_same_seed_same_path(self):
        a = simulate_first_m(RATE, 10, seed=123)
        b = simulate_first_m(RATE, 10, seed=123)
        assert a.positions == b.positions

    def test_different_seeds_differ(self):
        a = simulate_first_m(RATE, 10, seed=123)
        b = simulate_first_m(RATE, 10, seed=124)
        assert a.positions != b.positions

    def test_generators_use_independent_streams(self):
        a = simulate_first_m(RATE, 10, seed=123)
        b = simulate_records_from_iid(RATE, 10, seed=123)
        assert a.positions != b.positions

    def test_study_deterministic(self):
        s1 = estimator_study(RATE, m=10, n_replicates=50, seed=9)
        s2 = estimator_study(RATE, m=10, n_replicates=50, seed=9)
        assert s1 == s2


class TestPathShape:
    def test_increasing_positive(self):
        path = simulate_first_m(RATE, 200, seed=1)
        pos = path.as_array()
        assert np.all(pos > 0)
        assert np.all(np.diff(pos) > 0)
        assert len(path) == 200

    def test_metadata(self):
        path = simulate_first_m(RATE, 3, seed=77)
        assert path.rate_used == RATE
        assert path.seed == 77

    def test_records_constructor(self):
        path = simulate_first_m(RATE, 25, seed=4)
        fitted = fit_mle(path.as_records())
        assert fitted.m == 25

    def test_m_validation(self):
        with pytest.raises(ValueError):
            simulate_first_m(RATE, 0, seed=1)


class TestScaleEquivariance:
    def test_rescaled_rate_rescales_positions(self):
        # multiplying positions by c matches simulating at beta / c**alpha
        c = 2.5
        base = simulate_first_m(RATE, 40, seed=31).as_array()
        scaled_rate = PowerLawRate(RATE.alpha, RATE.beta / c ** RATE.alpha)
        scaled = simulate_first_m(scaled_rate, 40, seed=31).as_array()
        assert np.allclose(scaled, c * base, rtol=1e-9)


class TestMarginals:
    def test_first_position_mean_unit_rate(self):
        # at alpha = beta = 1 the first position is Exp(1)
        rate = PowerLawRate(1.0, 1.0)
        draws = np.array(
            [simulate_first_m(rate, 1, seed=s).positions[0] for s in range(100_000)]
        )
        assert abs(np.mean(draws) - 1.0) <= 0.01

    def test_first_position_median_quadratic_rate(self):
        rate = PowerLawRate(2.0, 1.0)
        draws = np.array(
            [simulate_first_m(rate, 1, seed=s).positions[0] for s in range(100_000)]
        )
        # median solves exp(-t^2) = 1/2, i.e. sqrt(log 2)
        assert abs(np.median(draws) - 0.8326) <= 0.01

    def test_first_position_distribution(self):
        draws = np.array(
            [simulate_first_m(RATE, 1, seed=s).positions[0] for s in range(20_000)]
        )
        res = stats.kstest(draws, lambda x: 1.0 - survival(RATE, x))
        assert res.pvalue > 0.01

    def test_rescaled_increments_are_unit_exponential(self):
        us = []
        for s in range(2000):
            path = simulate_first_m(RATE, 5, seed=s)
            us.append(time_rescaling_increments(RATE, path.as_array()))
        us = np.concatenate(us)
        res = stats.kstest(us, "expon")
        assert res.pvalue > 0.01


class TestRecordEquivalence:
    def test_generators_share_one_law(self):
        # the two public generators must agree in distribution; compare
        # the third-position marginals
        a = np.array([simulate_first_m(RATE, 3, seed=s).positions[2] for s in range(4000)])
        b = np.array(
            [simulate_records_from_iid(RATE, 3, seed=s).positions[2] for s in range(4000)]
        )
        res = stats.ks_2samp(a, b)
        assert res.pvalue > 0.01

    def test_against_naive_record_scan(self):
        # independent oracle: scan genuine i.i.d. draws for upper records
        # (survival exp(-beta t^alpha)); the capped budget truncates with
        # probability ~1e-5, negligible at this level
        rng = np.random.default_rng(99)
        naive = np.empty(2000)
        for i in range(naive.size):
            second = None
            while second is None:
                draws = (-np.log1p(-rng.random(4096)) / RATE.beta) ** (1.0 / RATE.alpha)
                best = -np.inf
                count = 0
                for x in draws:
                    if x > best:
                        best = x
                        count += 1
                        if count == 2:
                            second = x
                            break
            naive[i] = second
        inv = np.array(
            [simulate_records_from_iid(RATE, 2, seed=s).positions[1] for s in range(2000)]
        )
        res = stats.ks_2samp(naive, inv)
        assert res.pvalue > 0.01


class TestCountAt:
    def test_boundary_inclusive(self):
        path = simulate_first_m(RATE, 10, seed=6)
        third = path.positions[2]
        assert count_at(path, third) == 3
        assert count_at(path, third - 1e-12) == 2
        assert count_at(path, 0.0) == 0
        assert count_at(path, path.positions[-1] + 1.0) == 10

    def test_validation(self):
        path = simulate_first_m(RATE, 3, seed=6)
        with pytest.raises(ValueError):
            count_at(path, -0.5)
        with pytest.raises(ValueError):
            count_at(path, np.inf)

    def test_mean_count_matches_cumulative_rate(self):
        # E[N(50)] = Lambda(50); simulate well past the horizon so the
        # truncation at m = 60 events is immaterial
        horizon = 50.0
        target = cumulative_intensity(RATE, horizon)
        counts = np.array(
            [count_at(simulate_first_m(RATE, 60, seed=s), horizon) for s in range(10_000)]
        )
        assert np.all(counts < 60)
        assert abs(np.mean(counts) - target) <= 0.02 * target


class TestEstimatorStudy:
    def test_summary_coherence(self):
        study = estimator_study(RATE, m=20, n_replicates=400, seed=12)
        assert study.m == 20
        assert study.n_replicates == 400
        assert 0.0 <= study.coverage <= 1.0
        assert study.alpha_std > 0
        assert np.isclose(study.alpha_stderr, study.alpha_std / np.sqrt(400), rtol=1e-12)
        assert study.beta_mean > 0
        assert study.level == 0.95

    def test_alpha_centering(self):
        # median is nearly unbiased even where the mean is inflated
        study = estimator_study(RATE, m=30, n_replicates=600, seed=5)
        assert abs(study.alpha_median - RATE.alpha) / RATE.alpha < 0.1

    def test_validation(self):
        with pytest.raises(ValueError):
            estimator_study(RATE, m=1, n_replicates=10, seed=0)
        with pytest.raises(ValueError):
            estimator_study(RATE, m=5, n_replicates=0, seed=0)
