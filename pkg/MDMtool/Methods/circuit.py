"""
This file contains the resistive-mesh model of a crossbar with parasitic wire resistance, its solver and the
measured nonideality factor.

Every crosspoint (j, k) has a row node and a column node, joined by the device. Row nodes are chained by the
wire segments of their row and column nodes by the wire segments of their column. The row node at k = 0 touches
the driver of its row and the column node at j = 0 touches the virtual ground of its column, so both are fixed.
All indices in this file are physical.
"""
from __future__ import annotations

from pathlib import Path

import numpy as np
import scipy.linalg
import scipy.sparse as sp
from numpy.typing import ArrayLike
from scipy.sparse.linalg import cg

from MDMtool.logger import mdm_logger
from MDMtool.VariableClasses import BitTile, GeometryError, NfMeasurement, ResistanceParams, SimulationSetup, \
    SolverError


def _drive_vector(tile: BitTile, params: ResistanceParams, inputs: ArrayLike = None) -> np.ndarray:
    if inputs is None:
        return np.full(tile.rows, params.V_in)
    inputs = np.asarray(inputs, dtype=np.float64)
    if inputs.shape != (tile.rows,):
        raise GeometryError(f'{inputs.size} drive voltages were given for {tile.rows} rows.')
    return inputs


def device_conductance(tile: BitTile, params: ResistanceParams) -> np.ndarray:
    """
    This function returns the conductance of every device, indexed by physical position.

    Parameters
    ----------
    tile : BitTile
        Tile
    params : ResistanceParams
        Resistance parameters

    Returns
    -------
    np.ndarray
        J x K array with g_on for active and g_off for inactive cells [S]
    """
    return np.where(tile.physical_delta() == 1, params.g_on, params.g_off)


class MeshSystem:
    """
    Nodal-analysis system of a crossbar.

    The unknowns are the deviations of the free node voltages from the ideal voltages (V_j on row j, 0 V on
    every column). The deviations are of the order of the IR drop, so the column current deficits do not vanish
    in round-off.
    """

    __slots__ = 'rows', 'cols', 'inputs', 'conductance', 'laplacian', 'free', 'fixed', 'base', 'matrix', 'rhs'

    def __init__(self, rows: int, cols: int, inputs: np.ndarray, conductance: np.ndarray,
                 laplacian: sp.csr_matrix, base: np.ndarray):
        """

        Parameters
        ----------
        rows : int
            Number of rows J
        cols : int
            Number of columns K
        inputs : np.ndarray
            Drive voltage of every row [V]
        conductance : np.ndarray
            J x K device conductances [S]
        laplacian : sp.csr_matrix
            Conductance matrix of all 2JK nodes
        base : np.ndarray
            Ideal voltage of all 2JK nodes [V]
        """
        self.rows: int = rows
        self.cols: int = cols
        self.inputs: np.ndarray = inputs
        self.conductance: np.ndarray = conductance
        self.laplacian: sp.csr_matrix = laplacian
        self.base: np.ndarray = base

        fixed = np.concatenate((self.row_node(np.arange(rows), 0), self.column_node(0, np.arange(cols))))
        self.fixed: np.ndarray = np.sort(fixed)
        self.free: np.ndarray = np.setdiff1d(np.arange(self.n_nodes), self.fixed)
        reduced = laplacian[self.free]
        self.matrix: sp.csr_matrix = reduced[:, self.free].tocsr()
        self.rhs: np.ndarray = -(reduced @ base)

    @property
    def n_nodes(self) -> int:
        return 2 * self.rows * self.cols

    @property
    def n_unknowns(self) -> int:
        return self.free.size

    def row_node(self, j: int | np.ndarray, k: int | np.ndarray) -> int | np.ndarray:
        return j * self.cols + k

    def column_node(self, j: int | np.ndarray, k: int | np.ndarray) -> int | np.ndarray:
        return self.rows * self.cols + j * self.cols + k

    def voltages(self, deviations: np.ndarray) -> np.ndarray:
        """
        This function returns the voltage of all 2JK nodes for a solution of the reduced system.
        """
        voltages = self.base.copy()
        voltages[self.free] += deviations
        return voltages

    def terminal_currents(self, voltages: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """
        This function returns the current delivered by every row driver and the current sensed at every column.

        Parameters
        ----------
        voltages : np.ndarray
            Voltage of all 2JK nodes [V]

        Returns
        -------
        np.ndarray, np.ndarray
            J drive currents and K sense currents (physical column order) [A]
        """
        # net current injected into the mesh at every node
        injected = self.laplacian @ voltages
        drive = injected[self.row_node(np.arange(self.rows), 0)]
        sense = -injected[self.column_node(0, np.arange(self.cols))]
        return drive, sense


def build_mesh(tile: BitTile, params: ResistanceParams, inputs: ArrayLike = None) -> MeshSystem:
    """
    This function assembles the nodal-analysis system of a tile.

    Parameters
    ----------
    tile : BitTile
        Tile
    params : ResistanceParams
        Resistance parameters with r > 0
    inputs : ArrayLike
        Drive voltage of every (physical) row. Defaults to V_in on every row

    Returns
    -------
    MeshSystem
        System with 2JK - J - K unknowns

    Raises
    ------
    ValueError
        When r = 0, since the ideal currents follow without a mesh
    GeometryError
        When the number of drive voltages differs from the number of rows
    """
    if params.r == 0:
        raise ValueError('Without wire resistance there is no mesh to solve. Use the ideal currents instead.')
    inputs = _drive_vector(tile, params, inputs)
    rows, cols = tile.rows, tile.cols
    conductance = device_conductance(tile, params)
    g_wire = 1. / params.r

    j, k = np.meshgrid(np.arange(rows), np.arange(cols), indexing='ij')
    row_node = j * cols + k
    column_node = rows * cols + row_node

    devices = conductance > 0
    heads = [row_node[devices], row_node[:, :-1].ravel(), column_node[:-1, :].ravel()]
    tails = [column_node[devices], row_node[:, 1:].ravel(), column_node[1:, :].ravel()]
    values = [conductance[devices], np.full(rows * (cols - 1), g_wire), np.full((rows - 1) * cols, g_wire)]
    heads, tails, values = np.concatenate(heads), np.concatenate(tails), np.concatenate(values)

    n_nodes = 2 * rows * cols
    # duplicate entries are summed when converting to csr
    laplacian = sp.coo_matrix((np.concatenate((values, values, -values, -values)),
                               (np.concatenate((heads, tails, heads, tails)),
                                np.concatenate((heads, tails, tails, heads)))),
                              shape=(n_nodes, n_nodes)).tocsr()

    base = np.zeros(n_nodes)
    base[row_node.ravel()] = np.repeat(inputs, cols)
    return MeshSystem(rows, cols, inputs, conductance, laplacian, base)


def solve_mesh(system: MeshSystem, setup: SimulationSetup = None, tol: float = None) -> np.ndarray:
    """
    This function solves the nodal-analysis system. Small systems are solved directly, larger ones with the
    conjugate gradient method and a diagonal preconditioner. The true residual is checked afterwards.

    Parameters
    ----------
    system : MeshSystem
        System to solve
    setup : SimulationSetup
        Solver settings. Defaults to SimulationSetup()
    tol : float
        Relative residual ||Ax - b|| / ||b||. Defaults to setup.rtol

    Returns
    -------
    np.ndarray
        Voltage of all 2JK nodes [V]

    Raises
    ------
    SolverError
        When the tolerance is not reached within the iteration cap
    """
    setup = SimulationSetup() if setup is None else setup
    tol = setup.rtol if tol is None else tol
    n = system.n_unknowns
    b = system.rhs
    norm_b = np.linalg.norm(b)
    if n == 0 or norm_b == 0:
        return system.voltages(np.zeros(n))

    matrix = system.matrix
    if setup.use_dense(n):
        x = scipy.linalg.solve(matrix.toarray(), b, assume_a='pos')
        mdm_logger.main_info(f'Solved {n} unknowns directly.')
        return system.voltages(x)

    cap = setup.max_iterations(n)
    preconditioner = sp.diags(1. / matrix.diagonal())
    iterations = 0

    def count(_):
        nonlocal iterations
        iterations += 1

    x = np.zeros(n)
    residual = 1.
    # cg checks its recursively updated residual, which can drift from the true one; restart until both agree
    while iterations < cap:
        start = iterations
        x, _ = cg(matrix, b, x0=x, rtol=tol, maxiter=cap - iterations, M=preconditioner, callback=count)
        residual = np.linalg.norm(matrix @ x - b) / norm_b
        if residual <= tol:
            mdm_logger.main_info(f'Solved {n} unknowns in {iterations} iterations, relative residual {residual:.2e}.')
            return system.voltages(x)
        if iterations == start:
            break
    raise SolverError(iterations, residual, tol)


def ideal_currents(tile: BitTile, params: ResistanceParams, inputs: ArrayLike = None) -> np.ndarray:
    """
    This function returns the column currents without wire resistance, indexed by logical column.

    Parameters
    ----------
    tile : BitTile
        Tile
    params : ResistanceParams
        Resistance parameters
    inputs : ArrayLike
        Drive voltage of every row

    Returns
    -------
    np.ndarray
        i0_k = sum_j V_j g_jk [A]
    """
    physical = _drive_vector(tile, params, inputs) @ device_conductance(tile, params)
    return physical[tile.geometry.physical_column(np.arange(tile.cols))]


def measured_nf(tile: BitTile, params: ResistanceParams, setup: SimulationSetup = None,
                inputs: ArrayLike = None) -> NfMeasurement:
    """
    This function measures the nonideality factor of a tile by comparing the column currents of the mesh with
    the ideal column currents. Columns without ideal current are excluded.

    Parameters
    ----------
    tile : BitTile
        Tile
    params : ResistanceParams
        Resistance parameters
    setup : SimulationSetup
        Solver settings
    inputs : ArrayLike
        Drive voltage of every row. Defaults to V_in on every row

    Returns
    -------
    NfMeasurement
        Ideal and actual currents with the per-column and aggregate nonideality
    """
    inputs = _drive_vector(tile, params, inputs)
    ideal = ideal_currents(tile, params, inputs)
    if params.r == 0:
        drive = device_conductance(tile, params) @ np.ones(tile.cols) * inputs
        measurement = NfMeasurement(ideal, ideal, drive)
    else:
        system = build_mesh(tile, params, inputs)
        drive, sense = system.terminal_currents(solve_mesh(system, setup))
        measurement = NfMeasurement(ideal, sense[tile.geometry.physical_column(np.arange(tile.cols))], drive)
    if measurement.excluded:
        mdm_logger.warning(f'The columns {measurement.excluded} carry no current and are left out of the '
                           f'nonideality factor.')
    return measurement


def symmetry_check(tile: BitTile, params: ResistanceParams, setup: SimulationSetup = None) \
        -> tuple[float, float, float]:
    """
    This function compares the measured nonideality of a square tile with that of its anti-diagonal transpose.

    Parameters
    ----------
    tile : BitTile
        Square tile
    params : ResistanceParams
        Resistance parameters
    setup : SimulationSetup
        Solver settings

    Returns
    -------
    float, float, float
        Aggregate NF of the tile, of its transpose and their relative gap

    Raises
    ------
    GeometryError
        When the tile is not square
    """
    transposed = tile.antidiagonal_transpose()
    nf_a = measured_nf(tile, params, setup).aggregate
    nf_b = measured_nf(transposed, params, setup).aggregate
    largest = max(nf_a, nf_b)
    return nf_a, nf_b, abs(nf_a - nf_b) / largest if largest > 0 else 0.


def export_netlist(tile: BitTile, params: ResistanceParams, path: str | Path = None,
                   inputs: ArrayLike = None) -> str:
    """
    This function writes the crossbar as a SPICE deck. Every column is grounded through a 0 V source so its
    current is reported by the simulator. Open devices are left out.

    Parameters
    ----------
    tile : BitTile
        Tile
    params : ResistanceParams
        Resistance parameters with r > 0
    path : str or Path
        File to write. When None, nothing is written
    inputs : ArrayLike
        Drive voltage of every row. Defaults to V_in on every row

    Returns
    -------
    str
        Netlist

    Raises
    ------
    ValueError
        When r = 0
    """
    if params.r == 0:
        raise ValueError('A netlist needs a positive wire resistance.')
    inputs = _drive_vector(tile, params, inputs)
    conductance = device_conductance(tile, params)
    rows, cols = tile.rows, tile.cols

    lines = [f'* MDMtool crossbar {rows}x{cols} ({tile.dataflow.value}), r={params.r:g} Ohm']
    lines += [f'V{j} r{j}_0 0 DC {inputs[j]:.12g}' for j in range(rows)]
    lines += [f'VS{k} c0_{k} 0 DC 0' for k in range(cols)]
    resistors = []
    for j in range(rows):
        for k in range(cols):
            if conductance[j, k] > 0:
                resistors.append((f'r{j}_{k}', f'c{j}_{k}', 1. / conductance[j, k]))
            if k > 0:
                resistors.append((f'r{j}_{k - 1}', f'r{j}_{k}', params.r))
            if j > 0:
                resistors.append((f'c{j - 1}_{k}', f'c{j}_{k}', params.r))
    lines += [f'R{index} {node_a} {node_b} {ohms:.12g}' for index, (node_a, node_b, ohms) in enumerate(resistors)]
    lines += ['.op', '.end']

    netlist = '\n'.join(lines) + '\n'
    if path is not None:
        Path(path).write_text(netlist)
        mdm_logger.info(f'Wrote a netlist with {len(resistors)} resistors to {path}.')
    return netlist
