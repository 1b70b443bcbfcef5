import numpy as np
import pytest

from MDMtool import *


def test_exponential():
    dist = Exponential(2.)
    assert dist.f0 == 2.
    assert dist.bound(0) == 0.5
    assert dist.name == 'Exponential(2)'
    assert dist.to_dict() == {'name': 'exponential', 'lambda': 2.}
    with pytest.raises(ValueError):
        Exponential(0)


def test_bound_halves():
    dist = Exponential(1.)
    assert dist.bound(0) == 0.25
    assert dist.bound(3) == 0.03125
    assert all(np.isclose(dist.bound(k + 1), dist.bound(k) / 2) for k in range(8))


def test_half_normal():
    dist = HalfNormal(1.)
    assert np.isclose(dist.f0, 0.7978845608)
    assert np.isclose(dist.bound(0), 0.1994711402)
    with pytest.raises(ValueError):
        HalfNormal(-1)


def test_sample():
    rng = np.random.default_rng(0)
    for dist in (Exponential(), HalfNormal(0.3), Empirical([0.1, 0.5])):
        samples = dist.sample(rng, (3, 4))
        assert samples.shape == (3, 4)
        assert np.all(samples >= 0)
    assert set(Empirical([0.1, 0.5]).sample(rng, 100)) <= {0.1, 0.5}


def test_empirical():
    dist = Empirical([[0.1, 0.2], [0.3, 0.4]])
    assert dist.name == 'Empirical(n=4)'
    assert not dist.HAS_DECREASING_DENSITY
    with pytest.raises(UnsupportedDistribution):
        dist.f0
    with pytest.raises(ValueError):
        Empirical([])
    with pytest.raises(ValueError):
        Empirical([-0.1])


def test_equal_unequal():
    assert HalfNormal(1.) == HalfNormal(1.)
    assert HalfNormal(1.) != HalfNormal(2.)
    assert HalfNormal(1.) != Exponential(1.)
    assert Empirical([0.1]) == Empirical([0.1])
