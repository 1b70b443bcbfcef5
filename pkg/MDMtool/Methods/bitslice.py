"""
This file contains the functions to slice weight matrices into binary crossbar tiles and to check the structured
bit-level sparsity of nonnegative weight distributions.
"""
from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike
from scipy import integrate, special

from MDMtool.logger import mdm_logger
from MDMtool.VariableClasses import BitTile, CrossbarGeometry, Dataflow, GeometryError, SparsityReport, \
    UnsupportedDistribution, WeightMatrix
from MDMtool.VariableClasses.WeightDistribution import Exponential, HalfNormal, _WeightDistribution


def quantization_scale(magnitudes: np.ndarray, leading_significance: int) -> float:
    """
    This function returns the power-of-two scale that brings every magnitude below 2^(-e_0+1).
    The scale is 1 when the magnitudes are already in range, so exact binary fractions are kept as they are.

    Parameters
    ----------
    magnitudes : np.ndarray
        Absolute values of the weights
    leading_significance : int
        Exponent e_0 of the most significant column

    Returns
    -------
    float
        Scale factor
    """
    limit = np.ldexp(1., -leading_significance + 1)
    largest = float(np.max(magnitudes)) if magnitudes.size else 0.
    if largest < limit:
        return 1.
    # largest / limit = f * 2^exponent with 0.5 <= f < 1, so dividing by 2^exponent brings it below 1
    _, exponent = np.frexp(largest / limit)
    return float(np.ldexp(1., int(exponent)))


def quantize(weights: WeightMatrix, significances: ArrayLike = None, bits: int = None,
             dataflow: Dataflow | str = Dataflow.CONVENTIONAL) -> tuple[list[BitTile], float]:
    """
    This function slices the magnitudes of a weight matrix into binary columns.
    Every column of the weight matrix (a weight group) becomes one tile with a row per weight. The bits are
    extracted by greedy binary expansion, which truncates towards zero.

    Parameters
    ----------
    weights : WeightMatrix
        Weights to quantize
    significances : ArrayLike
        Strictly increasing exponents e_c. Defaults to 0, 1, ..., bits-1
    bits : int
        Number of columns when no significances are given
    dataflow : Dataflow or str
        Orientation of the resulting tiles

    Returns
    -------
    list of BitTile, float
        One tile per weight group and the scale with w ~ scale * sum_c b_c 2^-e_c

    Raises
    ------
    ValueError
        When neither significances nor bits are given
    """
    if significances is None:
        if bits is None or bits < 1:
            raise ValueError('Either the significances or a positive number of bits should be given.')
        significances = np.arange(bits)
    significances = np.asarray(significances, dtype=np.int64)

    magnitudes = weights.magnitudes
    scale = quantization_scale(magnitudes, int(significances[0]))
    # division by a power of two is exact, as is every subtraction below
    residual = magnitudes / scale
    rows, groups = magnitudes.shape
    geometry = CrossbarGeometry(rows, significances.size, dataflow)

    planes = np.zeros((rows, groups, significances.size), dtype=np.int8)
    for c, exponent in enumerate(significances):
        value = np.ldexp(1., -int(exponent))
        bit = residual >= value
        planes[:, :, c] = bit
        residual = residual - bit * value

    tiles = [BitTile(geometry, planes[:, g, :], significances) for g in range(groups)]
    mdm_logger.main_info(f'Quantized a {rows}x{groups} weight matrix into {groups} tile(s) of {significances.size} '
                         f'bits with scale {scale}.')
    return tiles, scale


def stack_groups(tiles: list[BitTile]) -> BitTile:
    """
    This function places the tiles of several weight groups in one crossbar tile.
    The columns are laid out bit-plane-major: the most significant bit of every weight comes first, then the
    second bit of every weight and so on.

    Parameters
    ----------
    tiles : list of BitTile
        Single-group tiles with the same rows and significances

    Returns
    -------
    BitTile
        Tile with G x K columns

    Raises
    ------
    GeometryError
        When the tiles do not share their shape and significances
    """
    if not tiles:
        raise GeometryError('At least one tile is needed.')
    first = tiles[0]
    for tile in tiles[1:]:
        if tile.geometry != first.geometry or not np.array_equal(tile.significances, first.significances):
            raise GeometryError('Only tiles with the same geometry and significances can be stacked.')

    n_groups = len(tiles)
    delta = np.stack([tile.delta for tile in tiles], axis=2).reshape(first.rows, first.cols * n_groups)
    significances = np.repeat(first.significances, n_groups)
    groups = np.tile(np.arange(n_groups), first.cols)
    geometry = CrossbarGeometry(first.rows, first.cols * n_groups, first.dataflow)
    return BitTile(geometry, delta, significances, groups)


def dequantize(tile: BitTile, scale: float = 1.) -> WeightMatrix:
    """
    This function rebuilds the weight magnitudes stored in a tile.

    Parameters
    ----------
    tile : BitTile
        Tile with one or more weight groups
    scale : float
        Scale returned by quantize

    Returns
    -------
    WeightMatrix
        J x G matrix with w = scale * sum_c b_c 2^-e_c per weight group
    """
    contributions = tile.delta * tile.column_values
    group_ids = np.unique(tile.groups)
    values = np.column_stack([np.sum(contributions[:, tile.groups == group], axis=1) for group in group_ids])
    return WeightMatrix(scale * values)


def column_density(tile: BitTile) -> np.ndarray:
    """
    This function returns the fraction of active cells in every logical column.

    Parameters
    ----------
    tile : BitTile
        Tile

    Returns
    -------
    np.ndarray
        Array with K densities
    """
    return np.mean(tile.delta, axis=0, dtype=np.float64)


def fractional_bit(w: ArrayLike, k: int) -> np.ndarray:
    """
    This function returns the bit with weight 2^-(k+1) in the binary expansion of w.
    It equals 1 on the upper half of every interval [n L, (n+1) L[ with L = 2^-k.

    Parameters
    ----------
    w : ArrayLike
        Nonnegative values
    k : int
        Bit index (k = 0 gives L = 1)

    Returns
    -------
    np.ndarray
        Array of zeros and ones
    """
    return (np.floor(np.ldexp(np.asarray(w, dtype=np.float64), k + 1)) % 2).astype(np.int8)


def closed_form_density(dist: _WeightDistribution, k: int) -> float:
    """
    This function returns the probability that the k-th fractional bit is set, summed in closed form over all
    intervals [n L, (n+1) L[.

    Parameters
    ----------
    dist : _WeightDistribution
        Exponential or HalfNormal distribution
    k : int
        Bit index

    Returns
    -------
    float
        Probability p_k

    Raises
    ------
    UnsupportedDistribution
        For other distributions
    """
    length = 2. ** -k
    if isinstance(dist, Exponential):
        decay = np.exp(-dist.lambda_ * length)
        return float((np.exp(-dist.lambda_ * length / 2) - decay) / (1 - decay))
    if isinstance(dist, HalfNormal):
        # the terms vanish once the interval lies ten standard deviations away
        n = np.arange(int(np.ceil(10 * dist.sigma / length)) + 1)
        scaled = np.sqrt(2) * dist.sigma
        upper = special.erf((n + 1) * length / scaled)
        lower = special.erf((n + 0.5) * length / scaled)
        return float(np.sum(upper - lower))
    raise UnsupportedDistribution(dist.name)


def numerical_density(dist: _WeightDistribution, k: int, tail: float = 1e-14) -> float:
    """
    This function integrates the density over the upper half of every interval [n L, (n+1) L[.

    Parameters
    ----------
    dist : _WeightDistribution
        Distribution with a known density
    k : int
        Bit index
    tail : float
        Probability mass beyond the last interval that may be neglected

    Returns
    -------
    float
        Probability p_k
    """
    length = 2. ** -k
    end = length
    while integrate.quad(dist.density, end, np.inf)[0] > tail:
        end *= 2
    starts = np.arange(0, end, length)
    return float(sum(integrate.quad(dist.density, start + length / 2, start + length)[0] for start in starts))


def verify_theorem1(dist: _WeightDistribution, n: int = 10 ** 6, bits: int = 8, seed: int = 0,
                    tolerance: float = 3.) -> SparsityReport:
    """
    This function samples a weight distribution and compares the density of every fractional bit with the
    bound |p_k - 1/2| <= f(0)/2^(2+k). Higher-order bits of a decreasing density are sparser than one half.

    Parameters
    ----------
    dist : _WeightDistribution
        Distribution with a continuous, strictly decreasing density
    n : int
        Number of samples (at least 10^4)
    bits : int
        Number of fractional bits K
    seed : int
        Seed of the random number generator
    tolerance : float
        Number of binomial standard deviations allowed for sampling noise

    Returns
    -------
    SparsityReport
        Report with the empirical densities and the bounds

    Raises
    ------
    UnsupportedDistribution
        When the distribution does not satisfy the hypotheses of the bound
    ValueError
        When less than 10^4 samples are requested
    """
    if not dist.HAS_DECREASING_DENSITY:
        raise UnsupportedDistribution(dist.name)
    if n < 10 ** 4:
        raise ValueError(f'At least 10^4 samples are needed, not {n}.')
    if bits < 1:
        raise ValueError(f'The number of bits {bits} should be positive.')

    samples = dist.sample(np.random.default_rng(seed), n)
    p_hat = np.array([np.mean(fractional_bit(samples, k)) for k in range(bits)])
    bound = np.array([dist.bound(k) for k in range(bits)])
    report = SparsityReport(dist.name, n, dist.f0, p_hat, bound, tolerance)
    if not report.all_ok:
        mdm_logger.warning(f'The sparsity bound is violated for {dist.name} at the bits '
                           f'{np.flatnonzero(~report.ok).tolist()}.')
    mdm_logger.main_info(f'Checked {bits} fractional bits of {n} samples from {dist.name}.')
    return report
