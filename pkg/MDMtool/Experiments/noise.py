"""
This file contains the noise-injection model that emulates the parasitic resistance on the weights, the
calibration of its coefficient against the mesh solver and the matrix-vector accuracy proxy.
"""
from __future__ import annotations

from functools import partial

import numpy as np
import pandas as pd
from numpy.typing import ArrayLike

from MDMtool.Experiments._parallel import parallel_map, tile_rng
from MDMtool.logger import mdm_logger
from MDMtool.Methods.analytic import apply_plan, mdm_map
from MDMtool.Methods.bitslice import dequantize, quantize, stack_groups
from MDMtool.Methods.circuit import measured_nf
from MDMtool.VariableClasses import AccuracyReport, BitTile, CalibrationError, Dataflow, MdmPlan, NoiseModel, \
    ResistanceParams, SimulationSetup, WeightMatrix


def unit_deficits(tile: BitTile, params: ResistanceParams) -> np.ndarray:
    """
    This function returns the column current deficits the noise model predicts for eta = 1.

    Parameters
    ----------
    tile : BitTile
        Tile
    params : ResistanceParams
        Resistance parameters

    Returns
    -------
    np.ndarray
        sum_j delta_jk (V_in / R_on) d_M(j, k) per logical column [A]
    """
    return params.V_in * params.g_on * np.sum(tile.delta * tile.distance_matrix(), axis=0)


def fit_eta(unit: ArrayLike, measured: ArrayLike) -> float:
    """
    This function returns the coefficient eta that minimises sum (eta * unit - measured)^2.

    Parameters
    ----------
    unit : ArrayLike
        Deficits predicted for eta = 1
    measured : ArrayLike
        Measured deficits

    Returns
    -------
    float
        sum(unit * measured) / sum(unit^2)

    Raises
    ------
    CalibrationError
        When every predicted deficit is zero
    """
    unit = np.asarray(unit, dtype=np.float64).ravel()
    measured = np.asarray(measured, dtype=np.float64).ravel()
    denominator = np.dot(unit, unit)
    if denominator == 0:
        raise CalibrationError('The noise model predicts no deficit for any column, so eta cannot be calibrated.')
    return float(np.dot(unit, measured) / denominator)


def _deficits(tile: BitTile, params: ResistanceParams, setup: SimulationSetup) -> tuple[np.ndarray, np.ndarray]:
    return unit_deficits(tile, params), measured_nf(tile, params, setup).deficits


def calibrate_eta(tiles: list[BitTile], params: ResistanceParams = None, setup: SimulationSetup = None,
                  distance_weighted: bool = True) -> NoiseModel:
    """
    This function calibrates the noise coefficient so the column current deficits of the noise model match the
    deficits measured with the mesh solver, in the least-squares sense.

    Parameters
    ----------
    tiles : list of BitTile
        At least 10 tiles
    params : ResistanceParams
        Resistance parameters. Defaults to ResistanceParams()
    setup : SimulationSetup
        Solver settings, including the number of threads
    distance_weighted : bool
        Flag passed on to the returned noise model

    Returns
    -------
    NoiseModel
        Noise model with the calibrated eta

    Raises
    ------
    ValueError
        When less than 10 tiles are given
    CalibrationError
        When no tile has an active cell away from the rails
    """
    if len(tiles) < 10:
        raise ValueError(f'The calibration needs at least 10 tiles, not {len(tiles)}.')
    params = ResistanceParams() if params is None else params
    setup = SimulationSetup() if setup is None else setup

    results = parallel_map(partial(_deficits, params=params, setup=setup), tiles, setup.threads)
    eta = fit_eta(np.concatenate([unit for unit, _ in results]), np.concatenate([deficit for _, deficit in results]))
    mdm_logger.main_info(f'Calibrated eta = {eta:.4e} on {len(tiles)} tiles.')
    return NoiseModel(eta, distance_weighted)


def inject_noise(tile: BitTile, plan: MdmPlan, model: NoiseModel, scale: float = 1.) -> WeightMatrix:
    """
    This function returns the weights the crossbar effectively computes with when every active cell loses a
    fraction eta * d_M of its contribution, with d_M the distance of its position after the plan.

    Parameters
    ----------
    tile : BitTile
        Tile in its original row order
    plan : MdmPlan
        Placement of the rows
    model : NoiseModel
        Noise model
    scale : float
        Scale returned by quantize

    Returns
    -------
    WeightMatrix
        Perturbed weights per logical row and weight group

    Raises
    ------
    ModelError
        When eta times the largest distance is not below 1
    """
    model.check(tile.geometry.max_distance)
    placed = apply_plan(plan, tile)
    if model.distance_weighted:
        factor = 1 - model.eta * placed.distance_matrix()
    else:
        factor = np.full(placed.geometry.shape, 1 - model.eta)
    contributions = placed.delta * placed.column_values * factor
    weights = np.column_stack([np.sum(contributions[:, placed.groups == group], axis=1)
                               for group in np.unique(placed.groups)])
    # back to the logical row order
    return WeightMatrix(scale * weights[plan.row_perm])


def accuracy_proxy(weights: WeightMatrix, model: NoiseModel, trials: int = 100, seed: int = 0,
                   bits: int = 8, threads: int = None) -> AccuracyReport:
    """
    This function compares the matrix-vector output error caused by the noise model for the identity mapping,
    the full MDM plan and the MDM row sort without reversal.
    The crossbar computes y = W^T x for nonnegative inputs x drawn uniformly from [0, 1[.

    Parameters
    ----------
    weights : WeightMatrix
        Weights, one crossbar row per row of the matrix
    model : NoiseModel
        Noise model
    trials : int
        Number of input vectors (at least 30)
    seed : int
        Master seed
    bits : int
        Number of bits per weight
    threads : int
        Number of threads

    Returns
    -------
    AccuracyReport
        Relative output error of every trial for the three plans

    Raises
    ------
    ValueError
        When less than 30 trials are requested
    ModelError
        When the noise model is not valid for the crossbar
    """
    if trials < 30:
        raise ValueError(f'The accuracy proxy needs at least 30 trials, not {trials}.')
    tiles, scale = quantize(weights, bits=bits)
    tile = stack_groups(tiles)
    ideal = dequantize(tile, scale).values

    plans = (MdmPlan.identity(tile.rows, tile.dataflow), mdm_map(tile)[0], mdm_map(tile, tile.dataflow)[0])
    errors = [inject_noise(tile, plan, model, scale).values - ideal for plan in plans]

    def trial(index: int) -> np.ndarray | None:
        x = tile_rng(seed, index).random(tile.rows)
        norm = np.linalg.norm(ideal.T @ x)
        if norm == 0:
            return None
        return np.array([np.linalg.norm(error.T @ x) / norm for error in errors])

    results = parallel_map(trial, range(trials), threads)
    kept = np.array([result for result in results if result is not None]).reshape(-1, len(plans))
    discarded = trials - kept.shape[0]
    if discarded:
        mdm_logger.warning(f'{discarded} trials without ideal output were discarded.')
    report = AccuracyReport(model.eta, kept[:, 0], kept[:, 1], kept[:, 2], discarded)
    mdm_logger.main_info(f'Accuracy proxy with eta = {model.eta:.3e}: baseline {report.baseline_err:.4e}, '
                         f'MDM {report.mdm_err:.4e}, row sort {report.row_sort_err:.4e}.')
    return report


def accuracy_sweep(weights: WeightMatrix, etas: ArrayLike, trials: int = 100, seed: int = 0, bits: int = 8,
                   distance_weighted: bool = True, threads: int = None) -> pd.DataFrame:
    """
    This function runs the accuracy proxy for several noise coefficients.

    Parameters
    ----------
    weights : WeightMatrix
        Weights
    etas : ArrayLike
        Noise coefficients
    trials : int
        Number of input vectors per coefficient
    seed : int
        Master seed
    bits : int
        Number of bits per weight
    distance_weighted : bool
        Flag of the noise model
    threads : int
        Number of threads

    Returns
    -------
    pd.DataFrame
        Columns eta, baseline_err, mdm_err, row_sort_err and improved_fraction
    """
    reports = [accuracy_proxy(weights, NoiseModel(eta, distance_weighted), trials, seed, bits, threads)
               for eta in np.atleast_1d(etas)]
    return accuracy_frame(reports)


def accuracy_frame(reports: list[AccuracyReport]) -> pd.DataFrame:
    return pd.DataFrame({'eta': [report.eta for report in reports],
                         'baseline_err': [report.baseline_err for report in reports],
                         'mdm_err': [report.mdm_err for report in reports],
                         'row_sort_err': [report.row_sort_err for report in reports],
                         'improved_fraction': [report.improved_fraction for report in reports]})
