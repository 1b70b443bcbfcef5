"""
This document contains the information for the BaseClass.
This class is used as a super class for the different variable classes.
It also contains the exceptions that are raised throughout MDMtool.
"""
from __future__ import annotations

import numpy as np


class BaseClass:
    """
    This class contains basic functionality of different classes within MDMtool.

    This class should only be altered whenever a highly general method should be implemented.
    """

    def __eq__(self, other) -> bool:
        if not isinstance(other, self.__class__):
            return False
        for i in self.__slots__:
            value1, value2 = getattr(self, i), getattr(other, i)
            if isinstance(value1, np.ndarray) or isinstance(value2, np.ndarray):
                if not np.array_equal(value1, value2):
                    return False
            elif value1 != value2:
                return False
        return True


class GeometryError(ValueError):
    """
    This Error occurs when the dimensions of a tile, plan or drive vector do not agree, or when an operation
    needs a square tile.
    """


class DataError(ValueError):
    """
    This Error occurs when input data (weights, CSV or JSON artifacts) cannot be used.
    """


class UnsupportedDistribution(ValueError):
    """
    This Error occurs when the bit-level sparsity bound is requested for a distribution whose density
    hypotheses cannot be checked.
    """
    def __init__(self, name: str):
        super().__init__(f'The distribution {name} does not have a known, strictly decreasing density.')


class SizeError(ValueError):
    """
    This Error occurs when an exhaustive enumeration is requested for a tile that is too large.
    """
    def __init__(self, rows: int, max_rows: int):
        super().__init__(f'Exhaustive enumeration over {rows} rows is not possible. The maximum is {max_rows}.')


class SolverError(RuntimeError):
    """
    This Error occurs when the iterative mesh solver does not reach the requested tolerance.
    """
    def __init__(self, iterations: int, residual: float, tol: float):
        self.iterations = iterations
        self.residual = residual
        super().__init__(f'The mesh solver stopped after {iterations} iterations with a relative residual of '
                         f'{residual:.3e}, which is above the tolerance {tol:.1e}. There is no convergence.')


class FitError(ValueError):
    """
    This Error occurs when the least-squares map cannot be determined.
    """


class CalibrationError(ValueError):
    """
    This Error occurs when the noise coefficient cannot be calibrated.
    """


class ModelError(ValueError):
    """
    This Error occurs when the noise model is not valid for the given crossbar.
    """
