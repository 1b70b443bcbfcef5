"""
This file implements the result classes of the analytical predictor, the circuit solver and the experiments.
"""
from __future__ import annotations

import numpy as np
import pandas as pd

from MDMtool.VariableClasses.BaseClass import BaseClass


class RowScore(BaseClass):
    """
    Manhattan-based score of one logical row: the number of active cells and the sum of their physical
    column distances.
    """

    __slots__ = 'row', 'active_count', 'column_sum'

    def __init__(self, row: int, active_count: int, column_sum: int):
        self.row: int = int(row)
        self.active_count: int = int(active_count)
        self.column_sum: int = int(column_sum)

    @property
    def score(self) -> tuple:
        """Ascending sort key: denser rows first, then rows whose cells lie closer to the input rail."""
        return -self.active_count, self.column_sum

    def __repr__(self):
        return f'RowScore(row={self.row}, n={self.active_count}, c={self.column_sum})'


class NfPrediction(BaseClass):
    """
    Nonideality factor predicted by the Manhattan Hypothesis.
    """

    __slots__ = 'nf_sum', 'nf_normalized', 'r_over_ron', 'distance_sum', 'n_active'

    def __init__(self, nf_sum: float = 0., nf_normalized: float = 0., r_over_ron: float = 0.,
                 distance_sum: int = 0, n_active: int = 0):
        """

        Parameters
        ----------
        nf_sum : float
            r/R_on times the summed Manhattan distance of all active cells
        nf_normalized : float
            nf_sum divided by the number of active cells (at least 1)
        r_over_ron : float
            Ratio of the wire segment resistance and the on-resistance
        distance_sum : int
            Summed Manhattan distance of all active cells
        n_active : int
            Number of active cells
        """
        self.nf_sum: float = nf_sum
        self.nf_normalized: float = nf_normalized
        self.r_over_ron: float = r_over_ron
        self.distance_sum: int = distance_sum
        self.n_active: int = n_active

    def to_dict(self) -> dict:
        return {'nf_sum': self.nf_sum, 'nf_normalized': self.nf_normalized, 'r_over_ron': self.r_over_ron,
                'distance_sum': self.distance_sum, 'n_active': self.n_active}


class NfMeasurement(BaseClass):
    """
    Nonideality factor measured by solving the resistive mesh. All column quantities are indexed by logical
    column.
    """

    __slots__ = 'ideal', 'actual', 'per_column', 'aggregate', 'excluded', 'drive_currents'

    def __init__(self, ideal: np.ndarray, actual: np.ndarray, drive_currents: np.ndarray = None):
        """

        Parameters
        ----------
        ideal : np.ndarray
            Column currents for r = 0 [A]
        actual : np.ndarray
            Column currents with parasitic resistance [A]
        drive_currents : np.ndarray
            Current delivered by every row driver [A]
        """
        self.ideal: np.ndarray = np.asarray(ideal, dtype=np.float64)
        self.actual: np.ndarray = np.asarray(actual, dtype=np.float64)
        self.drive_currents: np.ndarray = np.asarray(drive_currents if drive_currents is not None else [],
                                                     dtype=np.float64)
        conducting = self.ideal > 0
        self.excluded: list = np.flatnonzero(~conducting).tolist()
        deficit = np.abs(self.actual - self.ideal)
        self.per_column: np.ndarray = np.full(self.ideal.shape, np.nan)
        self.per_column[conducting] = deficit[conducting] / self.ideal[conducting]
        total = np.sum(self.ideal[conducting])
        self.aggregate: float = float(np.sum(deficit[conducting]) / total) if total > 0 else 0.

    @property
    def deficits(self) -> np.ndarray:
        """Current lost per column w.r.t. the ideal crossbar [A]."""
        return self.ideal - self.actual

    @property
    def conservation_error(self) -> float:
        """Relative difference between the current delivered by the drivers and the sensed current."""
        total = np.sum(self.actual)
        if self.drive_currents.size == 0 or total == 0:
            return 0.
        return float(abs(np.sum(self.drive_currents) - total) / abs(total))

    def to_dict(self) -> dict:
        return {'aggregate': self.aggregate,
                'per_column': [None if np.isnan(value) else float(value) for value in self.per_column],
                'excluded_columns': self.excluded}


class NfReport(BaseClass):
    """
    Predicted and (optionally) measured nonideality of one tile.
    """

    __slots__ = 'geometry', 'params', 'predicted', 'measured'

    def __init__(self, geometry, params, predicted: NfPrediction, measured: NfMeasurement = None):
        self.geometry = geometry
        self.params = params
        self.predicted: NfPrediction = predicted
        self.measured: NfMeasurement | None = measured

    def to_dict(self) -> dict:
        data = {'geometry': self.geometry.to_dict(), 'params': self.params.to_dict(),
                'predicted': self.predicted.to_dict()}
        if self.measured is not None:
            data['measured'] = self.measured.to_dict()
        return data


class SparsityReport(BaseClass):
    """
    Empirical bit-column densities of a weight distribution next to the structured-sparsity bound.
    """

    __slots__ = 'distribution', 'n', 'f0', 'p_hat', 'bound', 'sigma', 'tolerance'

    def __init__(self, distribution: str, n: int, f0: float, p_hat: np.ndarray, bound: np.ndarray,
                 tolerance: float = 3.):
        """

        Parameters
        ----------
        distribution : str
            Name of the sampled distribution
        n : int
            Number of samples
        f0 : float
            Density of the distribution at zero
        p_hat : np.ndarray
            Fraction of samples with the k-th fractional bit set, for k = 0, 1, ...
        bound : np.ndarray
            f(0) / 2^(2+k)
        tolerance : float
            Number of binomial standard deviations allowed for sampling noise
        """
        self.distribution: str = distribution
        self.n: int = int(n)
        self.f0: float = float(f0)
        self.p_hat: np.ndarray = np.asarray(p_hat, dtype=np.float64)
        self.bound: np.ndarray = np.asarray(bound, dtype=np.float64)
        self.sigma: np.ndarray = np.sqrt(self.p_hat * (1 - self.p_hat) / self.n)
        self.tolerance: float = tolerance

    @property
    def ok(self) -> np.ndarray:
        slack = self.tolerance * self.sigma
        below_half = self.p_hat < 0.5 + slack
        within_bound = np.abs(self.p_hat - 0.5) <= self.bound + slack
        return below_half & within_bound

    @property
    def all_ok(self) -> bool:
        return bool(np.all(self.ok))

    def to_dict(self) -> dict:
        return {'distribution': self.distribution, 'n': self.n, 'f0': self.f0,
                'columns': [{'k': k, 'p_hat': float(p), 'bound': float(b), 'ok': bool(ok)}
                            for k, (p, b, ok) in enumerate(zip(self.p_hat, self.bound, self.ok))]}


class FitReport(BaseClass):
    """
    Least-squares map between predicted and measured nonideality with the distribution of the relative
    residuals.
    """

    __slots__ = 'slope', 'intercept', 'r_value', 'mu', 'sigma', 'n_tiles', 'predicted', 'measured', 'residuals'

    def __init__(self, slope: float, intercept: float, r_value: float, predicted: np.ndarray, measured: np.ndarray,
                 residuals: np.ndarray):
        """

        Parameters
        ----------
        slope : float
            Slope of measured = slope * predicted + intercept
        intercept : float
            Intercept of the map
        r_value : float
            Correlation coefficient
        predicted : np.ndarray
            Predicted nonideality of every tile
        measured : np.ndarray
            Measured nonideality of every tile
        residuals : np.ndarray
            (measured - fitted) / measured [%]
        """
        self.slope: float = float(slope)
        self.intercept: float = float(intercept)
        self.r_value: float = float(r_value)
        self.predicted: np.ndarray = np.asarray(predicted, dtype=np.float64)
        self.measured: np.ndarray = np.asarray(measured, dtype=np.float64)
        self.residuals: np.ndarray = np.asarray(residuals, dtype=np.float64)
        self.n_tiles: int = self.predicted.size
        self.mu: float = float(np.mean(self.residuals))
        self.sigma: float = float(np.std(self.residuals, ddof=1)) if self.n_tiles > 1 else 0.

    def scatter(self) -> pd.DataFrame:
        return pd.DataFrame({'predicted_nf': self.predicted, 'measured_nf': self.measured})

    def to_dict(self) -> dict:
        return {'slope': self.slope, 'intercept': self.intercept, 'r_value': self.r_value,
                'mu_pct': self.mu, 'sigma_pct': self.sigma, 'n_tiles': self.n_tiles}


class BenchmarkRow(BaseClass):
    """
    Mean nonideality of one (dataflow, mapping) configuration over a set of tiles.
    """

    __slots__ = 'dataflow', 'mdm', 'mean_nf', 'mean_predicted', 'reduction_pct'

    def __init__(self, dataflow, mdm: bool, mean_nf: float, mean_predicted: float, reduction_pct: float):
        self.dataflow = dataflow
        self.mdm: bool = mdm
        self.mean_nf: float = float(mean_nf)
        self.mean_predicted: float = float(mean_predicted)
        self.reduction_pct: float = float(reduction_pct)

    @property
    def label(self) -> str:
        return f'{self.dataflow.value}+{"mdm" if self.mdm else "identity"}'

    @property
    def flagged(self) -> bool:
        """True when the reduction is undefined because the baseline has no nonideality."""
        return bool(np.isnan(self.reduction_pct))

    def __eq__(self, other) -> bool:
        if not isinstance(other, BenchmarkRow):
            return False
        return self.label == other.label and np.allclose(
            [self.mean_nf, self.mean_predicted, self.reduction_pct],
            [other.mean_nf, other.mean_predicted, other.reduction_pct], rtol=0, atol=0, equal_nan=True)

    def __repr__(self):
        return f'{self.label}: mean NF {self.mean_nf:.4e}, reduction {self.reduction_pct:.2f}%'


class AccuracyReport(BaseClass):
    """
    Relative matrix-vector output error under noise injection for the identity mapping and for MDM.
    """

    __slots__ = 'eta', 'baseline_errors', 'mdm_errors', 'row_sort_errors', 'discarded'

    def __init__(self, eta: float, baseline_errors: np.ndarray, mdm_errors: np.ndarray,
                 row_sort_errors: np.ndarray, discarded: int = 0):
        """

        Parameters
        ----------
        eta : float
            Noise coefficient that was used
        baseline_errors : np.ndarray
            Relative output error of every trial for the identity mapping
        mdm_errors : np.ndarray
            Relative output error of every trial for the full MDM plan
        row_sort_errors : np.ndarray
            Relative output error of every trial when only the rows are sorted (orientation kept)
        discarded : int
            Number of trials without ideal output
        """
        self.eta: float = float(eta)
        self.baseline_errors: np.ndarray = np.asarray(baseline_errors, dtype=np.float64)
        self.mdm_errors: np.ndarray = np.asarray(mdm_errors, dtype=np.float64)
        self.row_sort_errors: np.ndarray = np.asarray(row_sort_errors, dtype=np.float64)
        self.discarded: int = int(discarded)

    @staticmethod
    def _mean(errors: np.ndarray) -> float:
        return float(np.mean(errors)) if errors.size else 0.

    @property
    def baseline_err(self) -> float:
        return self._mean(self.baseline_errors)

    @property
    def mdm_err(self) -> float:
        return self._mean(self.mdm_errors)

    @property
    def row_sort_err(self) -> float:
        return self._mean(self.row_sort_errors)

    @property
    def improved_fraction(self) -> float:
        """Fraction of the trials where the full MDM plan did at least as well as the identity mapping."""
        return float(np.mean(self.mdm_errors <= self.baseline_errors)) if self.mdm_errors.size else 1.

    @property
    def row_sort_improved_fraction(self) -> float:
        return float(np.mean(self.row_sort_errors <= self.baseline_errors)) if self.row_sort_errors.size else 1.

    def to_dict(self) -> dict:
        return {'eta': self.eta, 'baseline_err': self.baseline_err, 'mdm_err': self.mdm_err,
                'row_sort_err': self.row_sort_err}
