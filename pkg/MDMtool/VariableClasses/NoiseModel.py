"""
This document contains the NoiseModel class used to emulate parasitic-resistance effects on weights.
"""
from __future__ import annotations

from MDMtool.VariableClasses.BaseClass import BaseClass, ModelError


class NoiseModel(BaseClass):
    """
    Position-dependent multiplicative perturbation of active cells.

    With distance_weighted, an active cell at Manhattan distance d contributes its value times (1 - eta*d).
    Without it, every active cell contributes its value times (1 - eta), independent of its position.
    """

    __slots__ = 'eta', 'distance_weighted'

    def __init__(self, eta: float = 2e-3, distance_weighted: bool = True):
        """

        Parameters
        ----------
        eta : float
            Dimensionless noise coefficient per unit of Manhattan distance
        distance_weighted : bool
            True if the perturbation scales with the Manhattan distance of the active cell

        Raises
        ------
        ValueError
            When eta is negative
        """
        if not eta >= 0:
            raise ValueError(f'The noise coefficient {eta} cannot be negative.')
        self.eta: float = float(eta)
        self.distance_weighted: bool = bool(distance_weighted)

    def check(self, max_distance: int) -> None:
        """
        This function checks whether the model keeps every active cell contribution positive.

        Parameters
        ----------
        max_distance : int
            Largest Manhattan distance in the crossbar

        Returns
        -------
        None

        Raises
        ------
        ModelError
            When eta * max_distance >= 1
        """
        reach = self.eta * (max_distance if self.distance_weighted else 1)
        if reach >= 1:
            raise ModelError(f'The noise coefficient {self.eta} is too large: eta times the largest distance '
                             f'({max_distance}) equals {reach:.3f}, which should stay below 1.')

    def to_dict(self) -> dict:
        return {'eta': self.eta, 'distance_weighted': self.distance_weighted}

    def __repr__(self):
        return f'Noise model\n\teta: {self.eta:.4e}\n\tDistance weighted: {self.distance_weighted}'
