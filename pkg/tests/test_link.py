"""Physical-layer model: unit bridges, symbol frames, received signals."""

import math

import numpy as np
import pytest

from bccsim import (
    LinkParams,
    ParameterError,
    Weibull,
    NodeProfile,
    dbm_to_watts,
    generate_data_symbols,
    generate_received,
    noise_variance,
    registry_entry,
    training_symbols,
)


class StubRng:
    """Deterministic rng stand-in: constant uniform and constant noise value."""

    def __init__(self, uniform=0.5, noise=0.0):
        self.uniform = uniform
        self.noise = noise

    def random(self, size=None):
        return self.uniform if size is None else np.full(size, self.uniform)

    def normal(self, loc, scale, size=None):
        return self.noise if size is None else np.full(size, self.noise)


class TestDbmToWatts:
    def test_definition_points(self):
        assert dbm_to_watts(0.0) == pytest.approx(1e-3, rel=1e-14)
        assert dbm_to_watts(30.0) == 1.0

    def test_noise_floor(self):
        # independent evaluation of 10^-20.4
        oracle = math.exp(-20.4 * math.log(10.0))
        assert dbm_to_watts(-174.0) == pytest.approx(oracle, rel=1e-12)
        assert dbm_to_watts(-174.0) == pytest.approx(3.981e-21, rel=1e-3)

    def test_zero_power_limit(self):
        assert dbm_to_watts(float("-inf")) == 0.0

    def test_rejects_nan_and_positive_inf(self):
        with pytest.raises(ParameterError):
            dbm_to_watts(float("nan"))
        with pytest.raises(ParameterError):
            dbm_to_watts(float("inf"))


class TestNoiseVariance:
    def test_reference_value(self):
        oracle = math.exp(-20.4 * math.log(10.0)) * 1e5 / 2.0
        assert noise_variance(-174.0, 1e5) == pytest.approx(oracle, rel=1e-12)
        assert noise_variance(-174.0, 1e5) == pytest.approx(1.9905e-16, rel=1e-4)

    def test_zero_bandwidth(self):
        assert noise_variance(-174.0, 0.0) == 0.0

    def test_linear_in_bandwidth(self):
        assert noise_variance(-174.0, 2e5) == 2.0 * noise_variance(-174.0, 1e5)

    def test_negative_bandwidth(self):
        with pytest.raises(ParameterError):
            noise_variance(-174.0, -1.0)


class TestLinkParams:
    def test_derived_values(self):
        params = LinkParams(10.0)
        assert params.tx_power_w == dbm_to_watts(10.0) > 0.0
        assert params.noise_variance_w == noise_variance(-174.0, 1e5) > 0.0

    def test_validation(self):
        with pytest.raises(ParameterError):
            LinkParams(float("nan"))
        with pytest.raises(ParameterError):
            LinkParams(10.0, bandwidth_hz=-5.0)


class TestTrainingSymbols:
    def test_examples(self):
        assert training_symbols(4).tolist() == [1, 1, 0, 0]
        assert training_symbols(2).tolist() == [1, 0]

    def test_nt_50(self):
        x = training_symbols(50)
        assert x[:25].tolist() == [1] * 25
        assert x[25:].tolist() == [0] * 25

    def test_rejects_odd_and_zero(self):
        for bad in (0, 3, 7, -2):
            with pytest.raises(ParameterError):
                training_symbols(bad)


class TestGenerateDataSymbols:
    def test_mapping_convention(self):
        assert generate_data_symbols(5, StubRng(uniform=0.3)).tolist() == [1] * 5
        assert generate_data_symbols(5, StubRng(uniform=0.7)).tolist() == [0] * 5

    def test_single_symbol(self):
        assert generate_data_symbols(1, np.random.default_rng(0))[0] in (0, 1)

    def test_equiprobable(self):
        x = generate_data_symbols(1_000_000, np.random.default_rng(5))
        assert abs(x.mean() - 0.5) < 0.002

    def test_rejects_empty(self):
        with pytest.raises(ParameterError):
            generate_data_symbols(0, np.random.default_rng(0))


class TestGenerateReceived:
    def test_zero_symbol_zero_noise_gives_zero(self):
        params = LinkParams(10.0, bandwidth_hz=0.0)
        frame = generate_received(np.zeros(64, dtype=int), (registry_entry("f9"),),
                                  params, np.random.default_rng(0))
        assert np.all(frame.y == 0.0)

    def test_signal_only_equals_scaled_channel(self):
        params = LinkParams(20.0, bandwidth_hz=0.0)
        node = registry_entry("f5")
        frame = generate_received(np.ones(8, dtype=int), (node,), params,
                                  StubRng(uniform=0.5, noise=0.0))
        expected = math.sqrt(dbm_to_watts(20.0)) * 1.76e-6 * math.log(2.0) ** (1.0 / 3.88)
        assert frame.y == pytest.approx(np.full((1, 8), expected), rel=1e-12)

    def test_direct_substitution(self):
        # P = 1 W, h = 2, noise draw = 0.3 -> y = 2.3
        node = NodeProfile(1, Weibull(2.0, 1.7), "weak")
        u_at_scale = 1.0 - math.exp(-1.0)  # quantile there is the scale, h = 2
        frame = generate_received(np.ones(3, dtype=int), (node,), LinkParams(30.0),
                                  StubRng(uniform=u_at_scale, noise=0.3))
        assert frame.y == pytest.approx(np.full((1, 3), 2.3), rel=1e-12)

    def test_noise_only_variance(self):
        params = LinkParams(10.0)
        frame = generate_received(np.zeros(1_000_000, dtype=int), (registry_entry("f1"),),
                                  params, np.random.default_rng(8))
        measured = frame.y.var()
        assert measured == pytest.approx(params.noise_variance_w, rel=0.01)

    def test_power_scaling(self):
        # scaling P by s^2 scales the signal part by s (noise disabled)
        node = registry_entry("f9")
        x = np.ones(1000, dtype=int)
        lo = generate_received(x, (node,), LinkParams(10.0, bandwidth_hz=0.0),
                               np.random.default_rng(21))
        hi = generate_received(x, (node,), LinkParams(30.0, bandwidth_hz=0.0),
                               np.random.default_rng(21))
        assert hi.y == pytest.approx(10.0 * lo.y, rel=1e-12)

    def test_reproducible_bit_exact(self):
        nodes = (registry_entry("f1"), registry_entry("f9"))
        x = training_symbols(50)
        a = generate_received(x, nodes, LinkParams(10.0), np.random.default_rng(99))
        b = generate_received(x, nodes, LinkParams(10.0), np.random.default_rng(99))
        assert np.array_equal(a.y, b.y) and np.array_equal(a.h, b.h)

    def test_shape_and_frame_fields(self):
        nodes = (registry_entry("f1"), registry_entry("f2"), registry_entry("f3"))
        frame = generate_received(training_symbols(10), nodes, LinkParams(0.0),
                                  np.random.default_rng(1))
        assert frame.y.shape == frame.h.shape == (3, 10)
        assert frame.n_nodes == 3 and frame.n_slots == 10

    def test_rejects_bad_inputs(self):
        params = LinkParams(10.0)
        rng = np.random.default_rng(0)
        with pytest.raises(ParameterError):
            generate_received(np.ones(4, dtype=int), (), params, rng)
        with pytest.raises(ParameterError):
            generate_received(np.array([]), (registry_entry("f1"),), params, rng)
        with pytest.raises(ParameterError):
            generate_received(np.array([0, 2, 1]), (registry_entry("f1"),), params, rng)
