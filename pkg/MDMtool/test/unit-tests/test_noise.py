import numpy as np
import pytest

from MDMtool import *
from MDMtool.Experiments import accuracy_frame, accuracy_proxy, accuracy_sweep, calibrate_eta, fit_eta, \
    gen_dnn_like_tile, gen_dnn_like_weights, gen_random_tile, inject_noise, unit_deficits
from MDMtool.Methods import dequantize, mdm_map, quantize, stack_groups

params = ResistanceParams()


def _single_bit_tile(row: int) -> BitTile:
    delta = np.zeros((11, 1))
    delta[row, 0] = 1
    return BitTile.from_delta(delta, significances=[1])


def test_unit_deficits():
    tile = BitTile.from_delta([[1, 1], [1, 0]])
    assert np.allclose(unit_deficits(tile, params), params.g_on * np.array([1, 1]))
    assert np.allclose(unit_deficits(tile.with_dataflow('reversed'), params), params.g_on * np.array([3, 0]))


def test_fit_eta_synthetic():
    unit = np.random.default_rng(0).random(200) * 1e-6
    assert np.isclose(fit_eta(unit, 1e-3 * unit), 1e-3, rtol=1e-9)
    with pytest.raises(CalibrationError):
        fit_eta(np.zeros(5), np.ones(5))


def test_calibrate_eta():
    tiles = [gen_dnn_like_tile(HalfNormal(1.), 16, 16, seed=1, index=index, bits=8) for index in range(10)]
    model = calibrate_eta(tiles)
    assert model.eta > 0
    assert model.distance_weighted
    assert not calibrate_eta(tiles, distance_weighted=False).distance_weighted


def test_calibrate_eta_r_zero():
    tiles = [gen_random_tile(6, 6, 0.5, seed=2, index=index) for index in range(10)]
    assert calibrate_eta(tiles, params.with_r(0)).eta == 0


def test_calibrate_eta_errors():
    with pytest.raises(ValueError):
        calibrate_eta([gen_random_tile(4, 4)] * 9)
    # active cells only next to both rails
    tiles = [BitTile.from_delta([[1, 0], [0, 0]])] * 10
    with pytest.raises(CalibrationError):
        calibrate_eta(tiles)


def test_inject_noise_single_bit():
    tile = _single_bit_tile(10)
    weights = inject_noise(tile, MdmPlan.identity(11), NoiseModel(2e-3))
    assert np.isclose(weights.values[10, 0], 0.49)
    assert np.count_nonzero(weights.values) == 1


def test_inject_noise_distance_zero():
    weights = inject_noise(_single_bit_tile(0), MdmPlan.identity(11), NoiseModel(2e-3))
    assert weights.values[0, 0] == 0.5


def test_inject_noise_indicator():
    weights = inject_noise(_single_bit_tile(10), MdmPlan.identity(11), NoiseModel(2e-3, distance_weighted=False))
    assert np.isclose(weights.values[10, 0], 0.499)


def test_inject_noise_eta_zero():
    tiles, scale = quantize(gen_dnn_like_weights(HalfNormal(1.), 12, 3, seed=4), bits=6)
    tile = stack_groups(tiles)
    plan = mdm_map(tile)[0]
    assert np.allclose(inject_noise(tile, plan, NoiseModel(0.), scale).values, dequantize(tile, scale).values)


def test_inject_noise_follows_plan():
    # moving the bit from row 10 to row 0 removes the perturbation
    plan = MdmPlan(np.roll(np.arange(11), -1), 'conventional', 'conventional')
    assert plan.row_perm[10] == 0
    weights = inject_noise(_single_bit_tile(10), plan, NoiseModel(2e-3))
    assert weights.values[10, 0] == 0.5


def test_inject_noise_model_error():
    with pytest.raises(ModelError):
        inject_noise(_single_bit_tile(10), MdmPlan.identity(11), NoiseModel(0.2))


def test_accuracy_proxy_eta_zero():
    weights = gen_dnn_like_weights(HalfNormal(1.), 16, 2, seed=1)
    report = accuracy_proxy(weights, NoiseModel(0.), trials=30)
    assert report.baseline_err == report.mdm_err == report.row_sort_err == 0
    assert report.discarded == 0


def test_accuracy_proxy():
    weights = gen_dnn_like_weights(HalfNormal(1.), 64, 8, seed=1)
    report = accuracy_proxy(weights, NoiseModel(2e-3), trials=100, seed=0, bits=4, threads=2)
    assert report.baseline_errors.size == 100
    assert np.all(report.baseline_errors >= 0)
    assert np.all(report.mdm_errors >= 0)
    assert report.baseline_err > 0
    assert report.row_sort_err < report.baseline_err


def test_accuracy_proxy_zero_output():
    report = accuracy_proxy(WeightMatrix(np.zeros((4, 1))), NoiseModel(), trials=30)
    assert report.discarded == 30
    assert report.baseline_err == 0


def test_accuracy_proxy_errors():
    weights = gen_dnn_like_weights(HalfNormal(1.), 8, 1)
    with pytest.raises(ValueError):
        accuracy_proxy(weights, NoiseModel(), trials=10)
    with pytest.raises(ModelError):
        accuracy_proxy(weights, NoiseModel(0.5), trials=30)


def test_accuracy_sweep_monotone():
    weights = gen_dnn_like_weights(HalfNormal(1.), 32, 4, seed=2)
    frame = accuracy_sweep(weights, [0., 1e-3, 2e-3, 4e-3], trials=30)
    assert list(frame.columns) == ['eta', 'baseline_err', 'mdm_err', 'row_sort_err', 'improved_fraction']
    for column in ('baseline_err', 'mdm_err', 'row_sort_err'):
        assert np.all(np.diff(frame[column]) > 0)
    assert len(accuracy_frame([])) == 0
