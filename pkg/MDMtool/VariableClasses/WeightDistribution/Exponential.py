import numpy as np

from ._WeightDistribution import _WeightDistribution


class Exponential(_WeightDistribution):
    """
    Exponential distribution with rate lambda_, f(w) = lambda_ exp(-lambda_ w).
    """

    def __init__(self, lambda_: float = 1.):
        """

        Parameters
        ----------
        lambda_ : float
            Rate of the distribution [-]

        Raises
        ------
        ValueError
            When the rate is not positive
        """
        if not lambda_ > 0:
            raise ValueError(f'The rate {lambda_} of an exponential distribution should be positive.')
        self.lambda_: float = float(lambda_)

    @property
    def name(self) -> str:
        return f'Exponential({self.lambda_:g})'

    def sample(self, rng: np.random.Generator, size) -> np.ndarray:
        return rng.exponential(1. / self.lambda_, size)

    def density(self, w):
        return self.lambda_ * np.exp(-self.lambda_ * np.asarray(w, dtype=np.float64))

    def to_dict(self) -> dict:
        return {'name': 'exponential', 'lambda': self.lambda_}
