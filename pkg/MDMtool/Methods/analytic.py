"""
This file contains the analytical nonideality predictor based on the Manhattan distance of the active cells and
the Manhattan Distance Mapping (MDM) that minimises it.
"""
from __future__ import annotations

import itertools

import numpy as np

from MDMtool.logger import mdm_logger
from MDMtool.VariableClasses import BitTile, DataError, Dataflow, GeometryError, MdmPlan, NfPrediction, \
    ResistanceParams, RowScore, SizeError

# largest number of rows for the exhaustive search
MAX_BRUTE_FORCE_ROWS = 9


def distance_sum(tile: BitTile) -> int:
    """
    This function returns the summed Manhattan distance of all active cells.

    Parameters
    ----------
    tile : BitTile
        Tile

    Returns
    -------
    int
        Sum of j + physical k over the active cells
    """
    return int(np.sum(tile.distance_matrix() * tile.delta))


def analytic_nf(tile: BitTile, params: ResistanceParams) -> NfPrediction:
    """
    This function predicts the nonideality factor of a tile with the Manhattan Hypothesis:
    NF ~ r/R_on * sum over the active cells of their Manhattan distance.

    Parameters
    ----------
    tile : BitTile
        Tile
    params : ResistanceParams
        Resistance parameters

    Returns
    -------
    NfPrediction
        Summed and per-active-cell prediction
    """
    distances = distance_sum(tile)
    n_active = tile.n_active
    nf_sum = params.r_over_ron * distances
    return NfPrediction(nf_sum, nf_sum / max(1, n_active), params.r_over_ron, distances, n_active)


def _column_terms(tile: BitTile, dataflow: Dataflow) -> np.ndarray:
    """Summed physical column distance of the active cells of every row for a given orientation."""
    physical = tile.geometry.with_dataflow(dataflow).physical_column(np.arange(tile.cols))
    return tile.delta.astype(np.int64) @ physical


def row_scores(tile: BitTile) -> list[RowScore]:
    """
    This function computes the Manhattan-based score of every row of a tile.

    Parameters
    ----------
    tile : BitTile
        Tile in its current orientation

    Returns
    -------
    list of RowScore
        Active count and summed physical column distance per row
    """
    counts = np.sum(tile.delta, axis=1, dtype=np.int64)
    columns = _column_terms(tile, tile.dataflow)
    return [RowScore(row, n, c) for row, (n, c) in enumerate(zip(counts, columns))]


def decomposition(tile: BitTile) -> tuple[int, int]:
    """
    This function splits the summed Manhattan distance into a part that depends on the row order and a part that
    does not.

    Parameters
    ----------
    tile : BitTile
        Tile

    Returns
    -------
    int, int
        sum_j j * n_j and sum_j c_j. Their sum equals distance_sum(tile)
    """
    scores = row_scores(tile)
    row_term = sum(score.row * score.active_count for score in scores)
    column_term = sum(score.column_sum for score in scores)
    return row_term, column_term


def _check_plan(plan: MdmPlan, tile: BitTile, dataflow: Dataflow) -> None:
    if plan.rows != tile.rows:
        raise GeometryError(f'The plan has {plan.rows} rows but the tile has {tile.rows} rows.')
    if tile.dataflow is not dataflow:
        raise DataError(f'The plan expects a {dataflow.value} tile, not a {tile.dataflow.value} tile.')


def apply_plan(plan: MdmPlan, tile: BitTile) -> BitTile:
    """
    This function places every logical row at its physical row and sets the orientation of the plan.

    Parameters
    ----------
    plan : MdmPlan
        Plan
    tile : BitTile
        Tile with the source orientation of the plan

    Returns
    -------
    BitTile
        Remapped tile

    Raises
    ------
    GeometryError
        When the number of rows differs
    DataError
        When the tile does not have the source orientation of the plan
    """
    _check_plan(plan, tile, plan.source_dataflow)
    return BitTile(tile.geometry.with_dataflow(plan.dataflow), tile.delta[plan.inverse_perm],
                   tile.significances, tile.groups)


def invert_plan(plan: MdmPlan, tile: BitTile) -> BitTile:
    """
    This function restores the tile a plan was applied to.

    Parameters
    ----------
    plan : MdmPlan
        Plan
    tile : BitTile
        Remapped tile

    Returns
    -------
    BitTile
        Original tile

    Raises
    ------
    GeometryError
        When the number of rows differs
    DataError
        When the tile does not have the target orientation of the plan
    """
    _check_plan(plan, tile, plan.dataflow)
    return BitTile(tile.geometry.with_dataflow(plan.source_dataflow), tile.delta[plan.row_perm],
                   tile.significances, tile.groups)


def choose_dataflow(tile: BitTile) -> Dataflow:
    """
    This function returns the orientation with the smallest summed column distance. Ties go to the reversed
    dataflow.
    """
    reversed_term = int(np.sum(_column_terms(tile, Dataflow.REVERSED)))
    conventional_term = int(np.sum(_column_terms(tile, Dataflow.CONVENTIONAL)))
    return Dataflow.REVERSED if reversed_term <= conventional_term else Dataflow.CONVENTIONAL


def mdm_map(tile: BitTile, dataflow: Dataflow | str = None) -> tuple[MdmPlan, BitTile]:
    """
    This function applies the Manhattan Distance Mapping to a tile.
    First the orientation is chosen, then every row is scored and finally the rows are sorted so the densest
    rows are placed nearest to the output rail. Ties are broken by the summed column distance and then by the
    original row index.

    Parameters
    ----------
    tile : BitTile
        Tile
    dataflow : Dataflow or str
        Orientation to use. When None, the orientation with the smallest summed column distance is used

    Returns
    -------
    MdmPlan, BitTile
        Plan and remapped tile
    """
    target = choose_dataflow(tile) if dataflow is None else Dataflow.from_string(dataflow)
    scores = row_scores(tile.with_dataflow(target))

    counts = np.array([score.active_count for score in scores])
    columns = np.array([score.column_sum for score in scores])
    # lexsort uses the last key as the primary one
    order = np.lexsort((np.arange(tile.rows), columns, -counts))
    row_perm = np.empty(tile.rows, dtype=np.int64)
    row_perm[order] = np.arange(tile.rows)

    plan = MdmPlan(row_perm, target, tile.dataflow)
    return plan, apply_plan(plan, tile)


def brute_force_optimal_nf(tile: BitTile, params: ResistanceParams = ResistanceParams()) \
        -> tuple[float, np.ndarray, Dataflow]:
    """
    This function evaluates analytic_nf on every row permutation of a tile in both orientations and returns the
    smallest prediction.

    Parameters
    ----------
    tile : BitTile
        Tile with at most 9 rows
    params : ResistanceParams
        Resistance parameters

    Returns
    -------
    float, np.ndarray, Dataflow
        Minimal nf_sum, the row permutation and the orientation that attain it

    Raises
    ------
    SizeError
        When the tile has more than 9 rows
    """
    if tile.rows > MAX_BRUTE_FORCE_ROWS:
        raise SizeError(tile.rows, MAX_BRUTE_FORCE_ROWS)

    best = None
    evaluated = 0
    for dataflow in (Dataflow.REVERSED, Dataflow.CONVENTIONAL):
        for permutation in itertools.permutations(range(tile.rows)):
            plan = MdmPlan(permutation, dataflow, tile.dataflow)
            nf_sum = analytic_nf(apply_plan(plan, tile), params).nf_sum
            evaluated += 1
            if best is None or nf_sum < best[0]:
                best = nf_sum, plan.row_perm, dataflow

    mdm_logger.main_info(f'Evaluated {evaluated} placements of a {tile.rows}-row tile.')
    return best
