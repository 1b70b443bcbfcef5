"""
This file contains the benchmark of the nonideality factor for both dataflows, with and without MDM.
"""
from __future__ import annotations

from functools import partial

import numpy as np
import pandas as pd

from MDMtool.Experiments._parallel import parallel_map
from MDMtool.logger import mdm_logger
from MDMtool.Methods.analytic import analytic_nf, mdm_map
from MDMtool.Methods.circuit import measured_nf
from MDMtool.VariableClasses import BenchmarkRow, BitTile, Dataflow, ResistanceParams, SimulationSetup

# (dataflow, mdm) in report order, the first one is the baseline
CONFIGURATIONS = ((Dataflow.CONVENTIONAL, False), (Dataflow.REVERSED, False),
                  (Dataflow.CONVENTIONAL, True), (Dataflow.REVERSED, True))


def configure(tile: BitTile, dataflow: Dataflow, mdm: bool) -> BitTile:
    """
    This function returns the tile as it is programmed for one benchmark configuration.

    Parameters
    ----------
    tile : BitTile
        Tile in its original row order
    dataflow : Dataflow
        Orientation
    mdm : bool
        True to sort the rows with MDM for this orientation

    Returns
    -------
    BitTile
    """
    tile = tile.with_dataflow(dataflow)
    return mdm_map(tile, dataflow)[1] if mdm else tile


def _evaluate_tile(tile: BitTile, params: ResistanceParams, setup: SimulationSetup) -> np.ndarray:
    results = np.empty((len(CONFIGURATIONS), 2))
    for i, (dataflow, mdm) in enumerate(CONFIGURATIONS):
        configured = configure(tile, dataflow, mdm)
        results[i] = measured_nf(configured, params, setup).aggregate, analytic_nf(configured, params).nf_sum
    return results


def nf_benchmark(tiles: list[BitTile], params: ResistanceParams = None,
                 setup: SimulationSetup = None) -> list[BenchmarkRow]:
    """
    This function measures the mean nonideality factor of a set of tiles for the four combinations of dataflow
    and row mapping and the reduction with respect to the conventional dataflow without MDM.

    Parameters
    ----------
    tiles : list of BitTile
        At least 30 tiles
    params : ResistanceParams
        Resistance parameters. Defaults to ResistanceParams()
    setup : SimulationSetup
        Solver settings, including the number of threads

    Returns
    -------
    list of BenchmarkRow
        Conventional, Reversed, Conventional+MDM and Reversed+MDM

    Raises
    ------
    ValueError
        When less than 30 tiles are given
    """
    if len(tiles) < 30:
        raise ValueError(f'The benchmark needs at least 30 tiles, not {len(tiles)}.')
    params = ResistanceParams() if params is None else params
    setup = SimulationSetup() if setup is None else setup

    results = np.array(parallel_map(partial(_evaluate_tile, params=params, setup=setup), tiles, setup.threads))
    means = np.mean(results, axis=0)
    baseline = means[0, 0]
    if baseline == 0:
        mdm_logger.warning('The baseline has no nonideality, so the reductions are undefined.')

    rows = []
    for (dataflow, mdm), (mean_nf, mean_predicted) in zip(CONFIGURATIONS, means):
        reduction = (baseline - mean_nf) / baseline * 100 if baseline > 0 else np.nan
        rows.append(BenchmarkRow(dataflow, mdm, mean_nf, mean_predicted, reduction))
    mdm_logger.main_info(f'Benchmarked {len(tiles)} tiles: ' + ', '.join(map(repr, rows)))
    return rows


def benchmark_frame(rows: list[BenchmarkRow]) -> pd.DataFrame:
    """
    This function returns the benchmark as a table with the columns config, mean_nf, reduction_pct and
    mean_predicted_nf.
    """
    return pd.DataFrame({'config': [row.label for row in rows],
                         'mean_nf': [row.mean_nf for row in rows],
                         'reduction_pct': [row.reduction_pct for row in rows],
                         'mean_predicted_nf': [row.mean_predicted for row in rows]})
