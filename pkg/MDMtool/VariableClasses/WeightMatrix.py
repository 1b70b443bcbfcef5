"""
This document contains the WeightMatrix class.
"""
from __future__ import annotations

from pathlib import Path

import numpy as np
import pandas as pd
from numpy.typing import ArrayLike

from MDMtool.VariableClasses.BaseClass import BaseClass, DataError


class WeightMatrix(BaseClass):
    """
    Real-valued weight matrix with one crossbar row per matrix row and one weight group per matrix column.
    """

    __slots__ = 'values',

    def __init__(self, values: ArrayLike):
        """

        Parameters
        ----------
        values : ArrayLike
            rows x weights-per-row matrix. A 1D array is interpreted as a single column.

        Raises
        ------
        DataError
            When a weight is not finite
        """
        values = np.asarray(values, dtype=np.float64)
        if values.ndim == 1:
            values = values[:, None]
        if values.ndim != 2:
            raise DataError(f'A weight matrix should be two-dimensional, not {values.ndim}-dimensional.')
        if not np.all(np.isfinite(values)):
            raise DataError('All weights should be finite.')
        self.values: np.ndarray = values.copy()
        self.values.setflags(write=False)

    @property
    def shape(self) -> tuple:
        return self.values.shape

    @property
    def magnitudes(self) -> np.ndarray:
        return np.abs(self.values)

    @classmethod
    def from_csv(cls, path: str | Path) -> WeightMatrix:
        """
        This function reads a weight matrix from a CSV file with one matrix row per line.

        Parameters
        ----------
        path : str or Path
            Location of the CSV file

        Returns
        -------
        WeightMatrix

        Raises
        ------
        DataError
            When the file is empty or a line does not only contain decimal numbers
        """
        try:
            df = pd.read_csv(path, header=None, dtype=str, skip_blank_lines=False, keep_default_na=False,
                             na_values=[''])
        except pd.errors.EmptyDataError:
            raise DataError(f'{path}: no rows')
        except pd.errors.ParserError as error:
            raise DataError(f'{path}: {error}')
        # blank lines are dropped but keep their index, so index + 1 is the line in the file
        df = df.dropna(how='all')
        if df.empty:
            raise DataError(f'{path}: no rows')
        numbers = df.apply(lambda column: pd.to_numeric(column.str.strip(), errors='coerce'))
        invalid = numbers.isna() | ~np.isfinite(numbers.to_numpy(dtype=np.float64, na_value=np.nan))
        if invalid.to_numpy().any():
            row = invalid.index[invalid.to_numpy().any(axis=1)][0]
            raise DataError(f'{path}: line {row + 1}: expected finite decimal numbers, '
                            f'got {",".join(df.loc[row].fillna("").astype(str))}')
        return cls(numbers.to_numpy(dtype=np.float64))

    def to_csv(self, path: str | Path) -> None:
        pd.DataFrame(self.values).to_csv(path, header=False, index=False, float_format='%.17g')

    def __repr__(self):
        return f'Weight matrix {self.shape[0]}x{self.shape[1]}'
