import logging
import math

import numpy as np
import pytest

from cat_grape.benchmarking import decay_model, fit_decay, irb_error, rb_error

LENGTHS = np.array([1, 2, 4, 8, 12, 16, 24, 32, 48, 64], dtype=float)


def test_exact_decay_is_recovered() -> None:
    probabilities = decay_model(LENGTHS, 0.5, 1 / 50)

    fit = fit_decay(LENGTHS, probabilities)

    assert fit.decaying
    assert fit.amplitude == pytest.approx(0.5, rel=1e-6)
    assert fit.tau == pytest.approx(50.0, rel=1e-6)
    assert fit.residual_rms < 1e-9
    np.testing.assert_allclose(fit.predict(LENGTHS), probabilities, atol=1e-9)


def test_noisy_decay_reports_an_uncertainty() -> None:
    rng = np.random.default_rng(6)
    probabilities = decay_model(LENGTHS, 0.45, 1 / 40) + rng.normal(scale=0.003, size=LENGTHS.size)

    fit = fit_decay(LENGTHS, probabilities)

    assert fit.tau == pytest.approx(40.0, rel=0.1)
    assert 0 < fit.tau_stderr < 10


def test_flat_data_give_the_infinite_sentinel() -> None:
    fit = fit_decay(LENGTHS, np.ones_like(LENGTHS))

    assert not fit.decaying
    assert math.isinf(fit.tau)
    assert math.isnan(fit.tau_stderr)
    assert fit.amplitude == pytest.approx(0.5)
    np.testing.assert_allclose(fit.predict([1, 100]), [1.0, 1.0])


def test_data_at_the_asymptote_give_the_sentinel() -> None:
    assert math.isinf(fit_decay(LENGTHS, np.full_like(LENGTHS, 0.5)).tau)


def test_needs_three_distinct_lengths() -> None:
    with pytest.raises(ValueError, match="at least three distinct sequence lengths"):
        fit_decay(np.array([1, 1, 2]), np.array([0.9, 0.9, 0.8]))


def test_shapes_must_match() -> None:
    with pytest.raises(ValueError, match="same shape"):
        fit_decay(LENGTHS, np.ones(3))


class TestErrorRates:
    def test_rb_error_per_gate(self) -> None:
        assert rb_error(100.0) == pytest.approx(4.975e-3, rel=1e-3)

    def test_no_decay_means_no_error(self) -> None:
        assert rb_error(math.inf) == 0.0

    def test_interleaved_error(self) -> None:
        assert irb_error(50.0, 100.0) == pytest.approx((1 - math.exp(-0.01)) / 2)

    def test_equal_decays_give_zero_interleaved_error(self) -> None:
        assert irb_error(80.0, 80.0) == pytest.approx(0.0)

    def test_slower_interleaved_decay_warns(self, caplog: pytest.LogCaptureFixture) -> None:
        with caplog.at_level(logging.WARNING, logger="cat_grape.benchmarking.decay_fit"):
            error = irb_error(200.0, 100.0)

        assert error < 0
        assert "is negative" in caplog.text

    @pytest.mark.parametrize("tau", [0.0, -5.0])
    def test_non_positive_tau_is_rejected(self, tau: float) -> None:
        with pytest.raises(ValueError, match="tau must be positive"):
            rb_error(tau)
