import math

import numpy as np

from ._WeightDistribution import _WeightDistribution


class HalfNormal(_WeightDistribution):
    """
    Magnitude of a zero-mean normal distribution, the bell-shaped weight model of trained networks.
    """

    def __init__(self, sigma: float = 1.):
        """

        Parameters
        ----------
        sigma : float
            Standard deviation of the underlying normal distribution

        Raises
        ------
        ValueError
            When sigma is not positive
        """
        if not sigma > 0:
            raise ValueError(f'The standard deviation {sigma} of a half-normal distribution should be positive.')
        self.sigma: float = float(sigma)

    @property
    def name(self) -> str:
        return f'HalfNormal({self.sigma:g})'

    def sample(self, rng: np.random.Generator, size) -> np.ndarray:
        return np.abs(rng.normal(0., self.sigma, size))

    def density(self, w):
        w = np.asarray(w, dtype=np.float64)
        return 2. / (self.sigma * math.sqrt(2 * math.pi)) * np.exp(-0.5 * (w / self.sigma) ** 2)

    def to_dict(self) -> dict:
        return {'name': 'halfnormal', 'sigma': self.sigma}
