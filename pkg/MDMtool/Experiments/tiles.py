"""
This file contains the generators of random and DNN-like crossbar tiles.
"""
from __future__ import annotations

import numpy as np

from MDMtool.Experiments._parallel import tile_rng
from MDMtool.Methods.bitslice import quantize, stack_groups
from MDMtool.VariableClasses import BitTile, CrossbarGeometry, Dataflow, GeometryError, WeightMatrix
from MDMtool.VariableClasses.WeightDistribution import _WeightDistribution


def gen_random_tile(rows: int, cols: int, sparsity: float = 0.8, seed: int = 0, index: int = 0,
                    dataflow: Dataflow | str = Dataflow.CONVENTIONAL) -> BitTile:
    """
    This function creates a tile where every cell is active with probability 1 - sparsity.

    Parameters
    ----------
    rows : int
        Number of rows J
    cols : int
        Number of columns K
    sparsity : float
        Fraction of inactive cells
    seed : int
        Master seed
    index : int
        Index of the tile within the experiment
    dataflow : Dataflow or str
        Orientation of the tile

    Returns
    -------
    BitTile

    Raises
    ------
    ValueError
        When the sparsity lies outside [0, 1]
    """
    if not 0 <= sparsity <= 1:
        raise ValueError(f'The sparsity {sparsity} should lie between 0 and 1.')
    geometry = CrossbarGeometry(rows, cols, dataflow)
    # random() lies in [0, 1[, so sparsity 1 gives an empty and sparsity 0 a full tile
    delta = tile_rng(seed, index).random(geometry.shape) >= sparsity
    return BitTile(geometry, delta)


def gen_dnn_like_tile(dist: _WeightDistribution, rows: int, cols: int, seed: int = 0, index: int = 0,
                      bits: int = None) -> BitTile:
    """
    This function samples a weight matrix from a distribution and slices it into one tile.
    With bits < cols, every row stores cols / bits weights, laid out bit-plane-major.

    Parameters
    ----------
    dist : _WeightDistribution
        Distribution of the weight magnitudes
    rows : int
        Number of rows J
    cols : int
        Number of columns K
    seed : int
        Master seed
    index : int
        Index of the tile within the experiment
    bits : int
        Number of bits per weight. Defaults to cols (one weight per row)

    Returns
    -------
    BitTile
        Tile with significances 0, 1, ..., bits-1 per weight

    Raises
    ------
    GeometryError
        When cols is not a multiple of bits
    """
    bits = cols if bits is None else bits
    if bits < 1 or cols % bits:
        raise GeometryError(f'{cols} columns cannot hold weights of {bits} bits.')
    tiles, _ = quantize(gen_dnn_like_weights(dist, rows, cols // bits, seed, index), bits=bits)
    return stack_groups(tiles)


def gen_dnn_like_weights(dist: _WeightDistribution, rows: int, groups: int, seed: int = 0,
                         index: int = 0) -> WeightMatrix:
    """
    This function samples a rows x groups weight matrix with the stream of one tile.
    """
    return WeightMatrix(dist.sample(tile_rng(seed, index), (rows, groups)))
