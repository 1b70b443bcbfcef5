"""
This document contains the SimulationSetup class.
This class contains all the relevant settings for the mesh solver and the experiment harness.
"""
from __future__ import annotations

import os

from MDMtool.VariableClasses.BaseClass import BaseClass


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get('MDMTOOL_THREADS', 1)))
    except ValueError:
        return 1


class SimulationSetup(BaseClass):
    """
    This class contains all the settings related to the MDMtool solvers.
    """

    __slots__ = 'solver', 'rtol', 'dense_threshold', 'iteration_factor', 'threads'

    SOLVERS: tuple = ('auto', 'dense', 'cg')

    def __init__(self, solver: str = 'auto', rtol: float = 1e-10, dense_threshold: int = 2500,
                 iteration_factor: float = 50., threads: int = None):
        """

        Parameters
        ----------
        solver : str
            'dense' for a direct dense solve, 'cg' for the Jacobi-preconditioned conjugate gradient method and
            'auto' to use the dense solve below dense_threshold unknowns and conjugate gradients above.
        rtol : float
            Relative residual ||Ax - b|| / ||b|| that the solution should reach
        dense_threshold : int
            Number of unknowns below which 'auto' uses the dense solve
        iteration_factor : float
            The conjugate gradient method stops after iteration_factor * sqrt(unknowns) iterations.
        threads : int
            Number of tiles that are processed in parallel. Defaults to the MDMTOOL_THREADS environment variable,
            or 1 when it is not set.
        """
        self.solver: str = 'auto'
        self.rtol: float = 1e-10
        self.dense_threshold: int = 2500
        self.iteration_factor: float = 50.
        self.threads: int = _default_threads()

        # set the variables in this class by passing down the values given in this function
        self._set_setup(kwargs=locals())

    def update_variables(self, **kwargs) -> None:
        """
        This function updates the variables in the current class.

        Parameters
        ----------
        kwargs
            Keyword arguments with all the variables that need to be changed with the corresponding new values

        Returns
        -------
        None
        """
        self._set_setup(kwargs)

    def _set_setup(self, kwargs) -> None:
        """
        This method sets all the variables in the SimulationSetup class.
        This is done by looping over all the keywords in the kwargs and setting the corresponding variables
        in this class to the value in the kwargs.

        Parameters
        ----------
        kwargs
            All the keyword arguments of the init class or all the variables in the class itself.

        Returns
        -------
        None

        Raises
        ------
        ValueError
            When an unknown variable or a problematic value is given
        """
        for key, val in kwargs.items():
            if key in self.__slots__:
                if val is None:
                    continue
                if key == 'solver' and val not in SimulationSetup.SOLVERS:
                    raise ValueError(f'The solver {val} does not exist! Choose from {SimulationSetup.SOLVERS}.')
                if key in ('rtol', 'iteration_factor') and not val > 0:
                    raise ValueError(f'The value {val} for {key} should be positive.')
                if key in ('threads', 'dense_threshold') and int(val) < (1 if key == 'threads' else 0):
                    raise ValueError(f'The value {val} for {key} is not valid.')
                self.__setattr__(key, val)
            elif key != 'self':
                raise ValueError(f'The variable {key} is not a valid option!')

    def use_dense(self, unknowns: int) -> bool:
        """
        This function returns True if a system with this number of unknowns is solved directly.
        """
        if self.solver == 'auto':
            return unknowns < self.dense_threshold
        return self.solver == 'dense'

    def max_iterations(self, unknowns: int) -> int:
        return max(1, int(self.iteration_factor * unknowns ** 0.5))
