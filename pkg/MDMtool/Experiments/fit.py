"""
This file contains the validation of the Manhattan Hypothesis: a least-squares map between the predicted and the
measured nonideality factor of random tiles.
"""
from __future__ import annotations

from functools import partial

import numpy as np
from numpy.typing import ArrayLike
from scipy import stats

from MDMtool.Experiments._parallel import parallel_map
from MDMtool.Experiments.tiles import gen_random_tile
from MDMtool.logger import mdm_logger
from MDMtool.Methods.analytic import analytic_nf
from MDMtool.Methods.circuit import measured_nf
from MDMtool.VariableClasses import FitError, FitReport, ResistanceParams, SimulationSetup


def fit_linear_map(predicted: ArrayLike, measured: ArrayLike) -> FitReport:
    """
    This function fits measured = slope * predicted + intercept with ordinary least squares and returns the
    relative residuals (measured - fitted) / measured in percent. Tiles without measured nonideality get a
    residual of zero.

    Parameters
    ----------
    predicted : ArrayLike
        Predicted nonideality per tile
    measured : ArrayLike
        Measured nonideality per tile

    Returns
    -------
    FitReport
        Map and residual statistics

    Raises
    ------
    FitError
        When less than two tiles are given or the predictor is constant while the measurement is not
    """
    predicted = np.asarray(predicted, dtype=np.float64)
    measured = np.asarray(measured, dtype=np.float64)
    if predicted.shape != measured.shape or predicted.ndim != 1:
        raise FitError('The predicted and measured values should be vectors of the same length.')
    if predicted.size < 2:
        raise FitError(f'At least two tiles are needed for a fit, not {predicted.size}.')

    if not np.any(measured):
        slope, intercept, r_value = 0., 0., 0.
    elif np.ptp(predicted) == 0:
        if np.ptp(measured) != 0:
            raise FitError('The predictor is the same for every tile, so it cannot explain the measurement.')
        # a constant set is matched exactly by the ratio, or by the intercept when nothing is predicted
        if predicted[0] != 0:
            slope, intercept = measured[0] / predicted[0], 0.
        else:
            slope, intercept = 0., measured[0]
        r_value = 1.
    else:
        result = stats.linregress(predicted, measured)
        slope, intercept, r_value = result.slope, result.intercept, result.rvalue

    fitted = slope * predicted + intercept
    safe = np.where(measured != 0, measured, 1.)
    residuals = np.where(measured != 0, (measured - fitted) / safe * 100, 0.)
    return FitReport(slope, intercept, r_value, predicted, measured, residuals)


def _evaluate_tile(index: int, rows: int, cols: int, sparsity: float, params: ResistanceParams, seed: int,
                   setup: SimulationSetup, normalized: bool) -> tuple[float, float]:
    tile = gen_random_tile(rows, cols, sparsity, seed, index)
    prediction = analytic_nf(tile, params)
    predicted = prediction.nf_normalized if normalized else prediction.nf_sum
    return predicted, measured_nf(tile, params, setup).aggregate


def hypothesis_fit(n_tiles: int = 500, rows: int = 64, cols: int = 64, sparsity: float = 0.8,
                   params: ResistanceParams = None, seed: int = 0, setup: SimulationSetup = None,
                   normalized: bool = False) -> FitReport:
    """
    This function generates random tiles, predicts and measures their nonideality and fits the linear map
    between both.

    Parameters
    ----------
    n_tiles : int
        Number of tiles (at least 30)
    rows : int
        Number of rows per tile
    cols : int
        Number of columns per tile
    sparsity : float
        Fraction of inactive cells
    params : ResistanceParams
        Resistance parameters. Defaults to ResistanceParams()
    seed : int
        Master seed
    setup : SimulationSetup
        Solver settings, including the number of threads
    normalized : bool
        True to use the per-active-cell prediction instead of the summed one

    Returns
    -------
    FitReport
        Map, residual statistics and the scatter of every tile

    Raises
    ------
    ValueError
        When less than 30 tiles are requested
    """
    if n_tiles < 30:
        raise ValueError(f'The hypothesis fit needs at least 30 tiles, not {n_tiles}.')
    params = ResistanceParams() if params is None else params
    setup = SimulationSetup() if setup is None else setup

    evaluate = partial(_evaluate_tile, rows=rows, cols=cols, sparsity=sparsity, params=params, seed=seed,
                       setup=setup, normalized=normalized)
    results = np.array(parallel_map(evaluate, range(n_tiles), setup.threads))
    report = fit_linear_map(results[:, 0], results[:, 1])
    mdm_logger.main_info(f'Fitted {n_tiles} tiles of {rows}x{cols}: slope {report.slope:.4e}, '
                         f'residual mean {report.mu:.3f}%, residual std {report.sigma:.3f}%.')
    return report
