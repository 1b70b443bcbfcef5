"""
This file contains the main class of MDMtool: a crossbar with its resistance parameters, solver settings and
noise model.
"""
from __future__ import annotations

import logging
from typing import Tuple

import matplotlib.pyplot as plt
import numpy as np
from numpy.typing import ArrayLike

from MDMtool.Experiments import accuracy_proxy, calibrate_eta, hypothesis_fit, nf_benchmark
from MDMtool.logger.mdm_logger import mdm_logger
from MDMtool.Methods import analytic_nf, export_netlist, measured_nf, mdm_map, symmetry_check
from MDMtool.VariableClasses import AccuracyReport, BenchmarkRow, BitTile, Dataflow, FitReport, MdmPlan, \
    NfMeasurement, NfPrediction, NfReport, NoiseModel, ResistanceParams, SimulationSetup, WeightMatrix
from MDMtool.VariableClasses.BaseClass import BaseClass


class Crossbar(BaseClass):
    """Main crossbar class"""

    __slots__ = 'params', '_simulation_setup', 'noise_model'

    def __init__(self, params: ResistanceParams = None, noise_model: NoiseModel = None, **kwargs):
        """

        Parameters
        ----------
        params : ResistanceParams
            Resistance parameters. Defaults to r = 2.5 Ohm, R_on = 300 kOhm, R_off = 3 MOhm and V_in = 1 V
        noise_model : NoiseModel
            Noise model for the accuracy proxy. Defaults to eta = 2e-3
        kwargs
            Options of the SimulationSetup

        Examples
        --------

        create the crossbar object

        >>> crossbar = Crossbar(ResistanceParams(r=2.5, R_on=3e5, R_off=3e6))

        predict and measure the nonideality of a tile

        >>> tile = BitTile.from_delta([[1, 1], [1, 1]])
        >>> nf_sum = crossbar.predict(tile).nf_sum
        >>> nf = crossbar.measure(tile).aggregate
        """
        self.params: ResistanceParams = ResistanceParams() if params is None else params
        self.noise_model: NoiseModel = NoiseModel() if noise_model is None else noise_model
        self._simulation_setup: SimulationSetup = SimulationSetup()
        self.simulation_setup(**kwargs)

    @staticmethod
    def activate_logger() -> None:
        """
        This function activates the logging.

        Returns
        -------
        None
        """
        mdm_logger.setLevel("MAIN_INFO")

    @staticmethod
    def deactivate_logger() -> None:
        """
        This function deactivates the logging.

        Returns
        -------
        None
        """
        mdm_logger.setLevel(logging.INFO)

    def simulation_setup(self, simulation_setup: SimulationSetup = None, **kwargs) -> None:
        """
        This function sets the options for the mesh solver and the experiments.

        Parameters
        ----------
        simulation_setup : SimulationSetup
            An instance of the SimulationSetup class. When this argument differs from None, all the other
            parameters are set based on this simulation_setup
        kwargs
            Options of the SimulationSetup class (solver, rtol, dense_threshold, iteration_factor, threads)

        Returns
        -------
        None
        """
        if simulation_setup is not None:
            self._simulation_setup = simulation_setup
            return
        self._simulation_setup.update_variables(**kwargs)

    @property
    def setup(self) -> SimulationSetup:
        return self._simulation_setup

    def set_params(self, params: ResistanceParams) -> None:
        """
        This function sets the resistance parameters.

        Parameters
        ----------
        params : ResistanceParams
            Resistance parameters

        Returns
        -------
        None
        """
        self.params = params

    def predict(self, tile: BitTile) -> NfPrediction:
        return analytic_nf(tile, self.params)

    def measure(self, tile: BitTile, inputs: ArrayLike = None) -> NfMeasurement:
        return measured_nf(tile, self.params, self.setup, inputs)

    def report(self, tile: BitTile, measure: bool = True) -> NfReport:
        """
        This function bundles the predicted and, optionally, the measured nonideality of a tile.

        Parameters
        ----------
        tile : BitTile
            Tile
        measure : bool
            True if the mesh should be solved

        Returns
        -------
        NfReport
        """
        measured = self.measure(tile) if measure else None
        return NfReport(tile.geometry, self.params, self.predict(tile), measured)

    @staticmethod
    def map(tile: BitTile, dataflow: Dataflow | str = None) -> Tuple[MdmPlan, BitTile]:
        return mdm_map(tile, dataflow)

    def symmetry(self, tile: BitTile) -> Tuple[float, float, float]:
        return symmetry_check(tile, self.params, self.setup)

    def netlist(self, tile: BitTile, path: str = None, inputs: ArrayLike = None) -> str:
        return export_netlist(tile, self.params, path, inputs)

    def hypothesis_fit(self, n_tiles: int = 500, rows: int = 64, cols: int = 64, sparsity: float = 0.8,
                       seed: int = 0) -> FitReport:
        return hypothesis_fit(n_tiles, rows, cols, sparsity, self.params, seed, self.setup)

    def benchmark(self, tiles: list[BitTile]) -> list[BenchmarkRow]:
        return nf_benchmark(tiles, self.params, self.setup)

    def calibrate(self, tiles: list[BitTile]) -> NoiseModel:
        """
        This function calibrates the noise model against the mesh solver and keeps it for the accuracy proxy.

        Parameters
        ----------
        tiles : list of BitTile
            At least 10 tiles

        Returns
        -------
        NoiseModel
            Calibrated noise model
        """
        self.noise_model = calibrate_eta(tiles, self.params, self.setup, self.noise_model.distance_weighted)
        return self.noise_model

    def accuracy(self, weights: WeightMatrix, trials: int = 100, seed: int = 0, bits: int = 8) -> AccuracyReport:
        return accuracy_proxy(weights, self.noise_model, trials, seed, bits, self.setup.threads)

    def print_fit(self, report: FitReport) -> Tuple[plt.Figure, plt.Axes]:
        """
        This function plots the measured against the predicted nonideality with the fitted map, next to the
        histogram of the relative residuals.

        Parameters
        ----------
        report : FitReport
            Result of the hypothesis fit

        Returns
        -------
        fig, ax
            Figure object
        """
        fig, (ax, ax_residuals) = plt.subplots(1, 2, figsize=(10, 4))
        ax.scatter(report.predicted, report.measured, s=6, color='tab:blue', label='Tiles')
        line = np.linspace(np.min(report.predicted), np.max(report.predicted), 2)
        ax.plot(line, report.slope * line + report.intercept, 'k-', lw=1.5, label='Least-squares map')
        ax.set_xlabel('Predicted NF (r/R_on x summed distance)')
        ax.set_ylabel('Measured NF')
        ax.legend()

        ax_residuals.hist(report.residuals, bins=30, color='tab:gray')
        ax_residuals.set_xlabel('Relative residual (%)')
        ax_residuals.set_ylabel('Number of tiles')
        ax_residuals.set_title(f'mu = {report.mu:.3f}%, sigma = {report.sigma:.2f}%')
        plt.show()
        return fig, ax

    def print_column_nf(self, tile: BitTile) -> Tuple[plt.Figure, plt.Axes]:
        """
        This function plots the measured nonideality of every column next to the active cells of the tile.

        Parameters
        ----------
        tile : BitTile
            Tile

        Returns
        -------
        fig, ax
            Figure object
        """
        measurement = self.measure(tile)
        fig, (ax_tile, ax) = plt.subplots(1, 2, figsize=(10, 4))
        ax_tile.imshow(tile.physical_delta(), cmap='Greys', interpolation='nearest')
        ax_tile.set_xlabel('Distance to the input rail')
        ax_tile.set_ylabel('Distance to the output rail')
        ax.step(np.arange(tile.cols), measurement.per_column, 'b-', where='mid', lw=1.5)
        ax.set_xlabel('Logical column')
        ax.set_ylabel('NF')
        ax.set_title(f'Aggregate NF = {measurement.aggregate:.3e}')
        plt.show()
        return fig, ax

    def __repr__(self):
        return f'Crossbar\n{self.params}\n{self.noise_model}'
