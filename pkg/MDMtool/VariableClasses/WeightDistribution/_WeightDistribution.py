"""
This file contains the base class for the nonnegative weight distributions.
"""
from __future__ import annotations

import abc
from abc import ABC

import numpy as np

from MDMtool.VariableClasses.BaseClass import UnsupportedDistribution


class _WeightDistribution(ABC):
    """
    Baseclass for the distributions of weight magnitudes.
    """

    # True if the density is continuous on [0, inf[, strictly decreasing and finite at 0
    HAS_DECREASING_DENSITY: bool = True

    @property
    @abc.abstractmethod
    def name(self) -> str:
        """Short description used in the reports."""

    @abc.abstractmethod
    def sample(self, rng: np.random.Generator, size) -> np.ndarray:
        """
        This function draws weight magnitudes.

        Parameters
        ----------
        rng : np.random.Generator
            Random number generator
        size : int or tuple
            Shape of the requested sample

        Returns
        -------
        np.ndarray
            Nonnegative samples
        """

    def density(self, w: np.ndarray | float) -> np.ndarray | float:  # pragma: no cover
        """
        This function returns the probability density at w.
        """
        raise UnsupportedDistribution(self.name)

    @property
    def f0(self) -> float:
        """Density at zero."""
        return float(self.density(0.))

    def bound(self, k: int) -> float:
        """
        This function returns the bound on |p_k - 1/2| for the k-th fractional bit, f(0)/2^(2+k).
        """
        return self.f0 / 2 ** (2 + k)

    def to_dict(self) -> dict:
        return {'name': self.name}

    def __eq__(self, other) -> bool:
        if not isinstance(other, self.__class__):
            return False
        return all(np.array_equal(value, other.__dict__[key]) for key, value in self.__dict__.items())

    def __repr__(self):
        return self.name
