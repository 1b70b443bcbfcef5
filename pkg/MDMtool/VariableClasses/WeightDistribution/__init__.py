from ._WeightDistribution import _WeightDistribution
from .Exponential import Exponential
from .HalfNormal import HalfNormal
from .Empirical import Empirical
