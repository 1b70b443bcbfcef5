"""
This document contains the variable classes for the crossbar geometry.
"""
from __future__ import annotations

from enum import Enum

import numpy as np

from MDMtool.VariableClasses.BaseClass import BaseClass, GeometryError


class Dataflow(Enum):
    """
    Orientation of the row inputs w.r.t. the logical columns.

    Conventional drives the rows from the side of logical column 0 (the highest-order bits),
    Reversed drives them from the side of the last logical column.
    """
    CONVENTIONAL = 'conventional'
    REVERSED = 'reversed'

    @classmethod
    def from_string(cls, value: str | Dataflow) -> Dataflow:
        """
        This function converts a string to a Dataflow.

        Parameters
        ----------
        value : str or Dataflow
            'conventional' or 'reversed' (case insensitive)

        Returns
        -------
        Dataflow

        Raises
        ------
        ValueError
            When the string is not a known dataflow
        """
        if isinstance(value, Dataflow):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f'The dataflow {value} does not exist! Choose between conventional and reversed.')

    def flipped(self) -> Dataflow:
        return Dataflow.REVERSED if self is Dataflow.CONVENTIONAL else Dataflow.CONVENTIONAL


class CrossbarGeometry(BaseClass):
    """
    Contains the dimensions and the dataflow orientation of a crossbar tile.

    A cell (j, k) lies j column-wire segments away from the output rail and k row-wire segments away from the
    input rail. Cells next to a rail terminal have distance 0.
    """

    __slots__ = 'rows', 'cols', 'dataflow'

    def __init__(self, rows: int, cols: int, dataflow: Dataflow | str = Dataflow.CONVENTIONAL):
        """

        Parameters
        ----------
        rows : int
            Number of rows J
        cols : int
            Number of columns K
        dataflow : Dataflow or str
            Orientation of the row inputs

        Raises
        ------
        GeometryError
            When the number of rows or columns is smaller than 1
        """
        if int(rows) != rows or int(cols) != cols or rows < 1 or cols < 1:
            raise GeometryError(f'A crossbar needs at least one row and one column, not ({rows}, {cols}).')
        self.rows: int = int(rows)
        self.cols: int = int(cols)
        self.dataflow: Dataflow = Dataflow.from_string(dataflow)

    @property
    def shape(self) -> tuple:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def max_distance(self) -> int:
        """Manhattan distance of the cell farthest away from both rails."""
        return self.rows - 1 + self.cols - 1

    def with_dataflow(self, dataflow: Dataflow | str) -> CrossbarGeometry:
        return CrossbarGeometry(self.rows, self.cols, dataflow)

    def physical_column(self, column: int | np.ndarray) -> int | np.ndarray:
        """
        This function returns the number of row-wire segments between a logical column and the input rail.

        Parameters
        ----------
        column : int or np.ndarray
            Logical column index

        Returns
        -------
        int or np.ndarray
            Physical column distance k
        """
        if self.dataflow is Dataflow.REVERSED:
            return self.cols - 1 - column
        return column

    def logical_column(self, k: int | np.ndarray) -> int | np.ndarray:
        # the mirror is its own inverse
        return self.physical_column(k)

    def manhattan_distance(self, j: int, k: int) -> int:
        """
        This function returns the Manhattan distance of a cell, i.e. the number of wire segments to the output
        rail plus the number of wire segments to the input rail.

        Parameters
        ----------
        j : int
            Row index (distance to the output rail)
        k : int
            Logical column index

        Returns
        -------
        int
            j + physical column distance

        Raises
        ------
        IndexError
            When the cell lies outside the crossbar
        """
        if not (0 <= j < self.rows and 0 <= k < self.cols):
            raise IndexError(f'The cell ({j}, {k}) lies outside the {self.rows}x{self.cols} crossbar.')
        return int(j + self.physical_column(k))

    def distance_matrix(self) -> np.ndarray:
        """
        This function returns the Manhattan distance of every cell, indexed by row and logical column.

        Returns
        -------
        np.ndarray
            J x K integer array
        """
        j = np.arange(self.rows)[:, None]
        k = self.physical_column(np.arange(self.cols))[None, :]
        return j + k

    def to_dict(self) -> dict:
        return {'rows': self.rows, 'cols': self.cols, 'dataflow': self.dataflow.value}

    def __repr__(self):
        return f'Crossbar geometry\n\tRows: {self.rows}\n\tColumns: {self.cols}\n\tDataflow: {self.dataflow.value}'
