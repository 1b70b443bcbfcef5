import numpy as np
from numpy.typing import ArrayLike

from ._WeightDistribution import _WeightDistribution


class Empirical(_WeightDistribution):
    """
    Resampling distribution over a fixed set of weight magnitudes, e.g. taken from a trained layer.
    Its density is unknown, so the sparsity bound cannot be checked for it.
    """

    HAS_DECREASING_DENSITY = False

    def __init__(self, samples: ArrayLike):
        """

        Parameters
        ----------
        samples : ArrayLike
            Nonnegative weight magnitudes

        Raises
        ------
        ValueError
            When the sample set is empty or contains negative values
        """
        samples = np.asarray(samples, dtype=np.float64).ravel()
        if samples.size == 0 or np.any(samples < 0) or not np.all(np.isfinite(samples)):
            raise ValueError('An empirical distribution needs nonnegative, finite samples.')
        self.samples: np.ndarray = samples

    @property
    def name(self) -> str:
        return f'Empirical(n={self.samples.size})'

    def sample(self, rng: np.random.Generator, size) -> np.ndarray:
        return rng.choice(self.samples, size=size, replace=True)

    def to_dict(self) -> dict:
        return {'name': 'empirical', 'n': int(self.samples.size)}
