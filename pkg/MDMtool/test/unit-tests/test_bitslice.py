import numpy as np
import pytest

from MDMtool import *
from MDMtool.Methods import closed_form_density, column_density, dequantize, fractional_bit, numerical_density, \
    quantization_scale, quantize, stack_groups, verify_theorem1


def test_quantize_exact_fraction():
    tiles, scale = quantize(WeightMatrix([0.625]), significances=[1, 2, 3])
    assert scale == 1
    assert len(tiles) == 1
    assert np.array_equal(tiles[0].delta, [[1, 0, 1]])
    assert np.array_equal(tiles[0].significances, [1, 2, 3])
    assert np.isclose(dequantize(tiles[0]).values[0, 0], 0.625)


def test_quantize_truncates():
    tiles, _ = quantize(WeightMatrix([0.9]), significances=[1, 2, 3])
    assert np.array_equal(tiles[0].delta, [[1, 1, 1]])
    assert dequantize(tiles[0]).values[0, 0] == 0.875


def test_quantize_zero():
    tiles, scale = quantize(WeightMatrix([0., 0.]), bits=4)
    assert scale == 1
    assert tiles[0].n_active == 0
    assert np.array_equal(dequantize(tiles[0]).values, np.zeros((2, 1)))


def test_quantize_magnitudes():
    tiles, _ = quantize(WeightMatrix([-0.625]), significances=[1, 2, 3])
    assert np.array_equal(tiles[0].delta, [[1, 0, 1]])


def test_quantize_needs_bits():
    with pytest.raises(ValueError):
        quantize(WeightMatrix([0.5]))
    with pytest.raises(ValueError):
        quantize(WeightMatrix([0.5]), bits=0)


def test_quantization_scale():
    assert quantization_scale(np.array([0.99]), 1) == 1
    assert quantization_scale(np.array([1.]), 1) == 2
    assert quantization_scale(np.array([3.2]), 0) == 2
    assert quantization_scale(np.array([4.]), 0) == 4
    assert quantization_scale(np.array([]), 0) == 1


def test_quantize_large_weights():
    weights = WeightMatrix([[3.2, 0.1], [1.5, 0.]])
    tiles, scale = quantize(weights, bits=8)
    assert scale == 2
    restored = dequantize(stack_groups(tiles), scale).values
    assert np.all(restored <= weights.values)
    assert np.all(weights.values < restored + scale * 2. ** -7)


def test_stack_groups():
    tiles, scale = quantize(WeightMatrix([[0.75, 0.5, 0.25]]), bits=2, dataflow='reversed')
    tile = stack_groups(tiles)
    assert tile.cols == 6
    assert tile.dataflow is Dataflow.REVERSED
    assert np.array_equal(tile.groups, [0, 1, 2, 0, 1, 2])
    assert np.array_equal(tile.significances, [0, 0, 0, 1, 1, 1])
    # the 2^0 bit plane comes first, then the 2^-1 bit plane
    assert np.array_equal(tile.delta, [[0, 0, 0, 1, 1, 0]])
    assert np.allclose(dequantize(tile, scale).values, [[0.5, 0.5, 0.]])


def test_stack_groups_errors():
    with pytest.raises(GeometryError):
        stack_groups([])
    with pytest.raises(GeometryError):
        stack_groups([BitTile.from_delta([[1, 0]]), BitTile.from_delta([[1, 0, 0]])])
    with pytest.raises(GeometryError):
        stack_groups([BitTile.from_delta([[1, 0]]), BitTile.from_delta([[1, 0]], significances=[1, 2])])


def test_column_density():
    assert np.array_equal(column_density(BitTile.from_delta(np.ones((3, 4)))), np.ones(4))
    assert np.array_equal(column_density(BitTile.from_delta(np.zeros((3, 4)))), np.zeros(4))
    assert np.allclose(column_density(BitTile.from_delta([[1, 0], [1, 1]])), [1, 0.5])


def test_fractional_bit():
    assert np.array_equal(fractional_bit([0.5, 0.75, 1.25, 1.75, 0.], 0), [1, 1, 0, 1, 0])
    assert np.array_equal(fractional_bit([0.25, 0.5, 0.75], 1), [1, 0, 1])


def test_closed_form_exponential():
    expected = (np.exp(-0.5) - np.exp(-1)) / (1 - np.exp(-1))
    assert np.isclose(closed_form_density(Exponential(1.), 0), expected)
    assert np.isclose(expected, 0.3775, atol=1e-4)


@pytest.mark.parametrize('dist', [Exponential(1.), Exponential(3.), HalfNormal(1.), HalfNormal(0.3)])
def test_closed_form_matches_integration(dist):
    for k in range(4):
        assert np.isclose(closed_form_density(dist, k), numerical_density(dist, k), atol=1e-8)


def test_closed_form_unsupported():
    with pytest.raises(UnsupportedDistribution):
        closed_form_density(Empirical([0.5]), 0)


def test_verify_theorem1_exponential():
    report = verify_theorem1(Exponential(1.), 10 ** 5, 8, seed=1)
    assert report.all_ok
    assert np.isclose(report.p_hat[0], 0.3775, atol=0.005)
    assert np.isclose(report.bound[0], 0.25)
    assert np.isclose(report.bound[3], 0.03125)
    assert report.p_hat[0] <= report.p_hat[-1] + 3 * report.sigma[-1]
    assert np.all(report.p_hat < 0.5 + 3 * report.sigma)


def test_verify_theorem1_half_normal():
    report = verify_theorem1(HalfNormal(1.), 10 ** 5, 8, seed=2)
    assert report.all_ok
    assert np.isclose(report.f0, 0.7978845608)
    assert np.isclose(report.bound[0], 0.1994711402)


def test_verify_theorem1_deterministic():
    assert verify_theorem1(HalfNormal(1.), 10 ** 4, 4, seed=5) == verify_theorem1(HalfNormal(1.), 10 ** 4, 4, seed=5)


def test_verify_theorem1_errors():
    with pytest.raises(UnsupportedDistribution):
        verify_theorem1(Empirical([0.1, 0.2]))
    with pytest.raises(ValueError):
        verify_theorem1(Exponential(), n=100)
    with pytest.raises(ValueError):
        verify_theorem1(Exponential(), bits=0)
