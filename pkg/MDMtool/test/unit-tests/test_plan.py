import numpy as np
import pytest

from MDMtool import *


def test_identity():
    plan = MdmPlan.identity(4)
    assert plan.is_identity
    assert plan.rows == 4
    assert plan.dataflow is plan.source_dataflow is Dataflow.CONVENTIONAL
    assert not MdmPlan(np.arange(4)).is_identity


def test_inverse_perm():
    plan = MdmPlan([2, 0, 1])
    assert np.array_equal(plan.inverse_perm, [1, 2, 0])
    assert np.array_equal(plan.row_perm[plan.inverse_perm], np.arange(3))


def test_not_a_bijection():
    with pytest.raises(DataError):
        MdmPlan([0, 0, 1])
    with pytest.raises(DataError):
        MdmPlan([1, 2, 3])


def test_json(tmp_path):
    plan = MdmPlan([1, 0, 2], 'reversed', 'conventional')
    assert plan.to_dict() == {'row_perm': [1, 0, 2], 'dataflow': 'reversed', 'source_dataflow': 'conventional'}
    plan.save_json(tmp_path / 'plan.json')
    assert MdmPlan.load_json(tmp_path / 'plan.json') == plan
    # plans without the source orientation come from a conventional tile
    assert MdmPlan.from_dict({'row_perm': [1, 0, 2], 'dataflow': 'reversed'}) == plan
    with pytest.raises(DataError):
        MdmPlan.from_dict({'dataflow': 'reversed'})


def test_noise_model():
    model = NoiseModel()
    assert model.eta == 2e-3
    assert model.distance_weighted
    model.check(126)
    with pytest.raises(ModelError):
        model.check(500)
    NoiseModel(0.5, distance_weighted=False).check(500)
    with pytest.raises(ModelError):
        NoiseModel(1., distance_weighted=False).check(0)
    with pytest.raises(ValueError):
        NoiseModel(-1e-3)
    assert model.to_dict() == {'eta': 2e-3, 'distance_weighted': True}
