import numpy as np
import pytest

from MDMtool import *


def test_defaults():
    tile = BitTile.from_delta([[1, 0, 1], [0, 0, 1]])
    assert tile.rows == 2
    assert tile.cols == 3
    assert tile.dataflow is Dataflow.CONVENTIONAL
    assert tile.n_active == 3
    assert tile.n_groups == 1
    assert np.array_equal(tile.significances, [0, 1, 2])
    assert np.allclose(tile.column_values, [1, 0.5, 0.25])


def test_groups_default_significances():
    tile = BitTile.from_delta(np.zeros((2, 4)), groups=[0, 1, 0, 1])
    assert np.array_equal(tile.significances, [0, 0, 1, 1])
    assert tile.n_groups == 2


def test_immutable():
    tile = BitTile.from_delta([[1, 0]])
    with pytest.raises(ValueError):
        tile.delta[0, 0] = 0


def test_errors():
    with pytest.raises(GeometryError):
        BitTile(CrossbarGeometry(2, 2), np.zeros((2, 3)))
    with pytest.raises(DataError):
        BitTile.from_delta([[0, 2]])
    with pytest.raises(DataError):
        BitTile.from_delta([[0, 1]], significances=[2, 1])
    with pytest.raises(GeometryError):
        BitTile.from_delta([[0, 1]], significances=[0, 1, 2])
    with pytest.raises(GeometryError):
        BitTile.from_delta([[0, 1]], groups=[0])


def test_physical_delta():
    tile = BitTile.from_delta([[1, 1, 0], [0, 0, 1]], 'reversed')
    assert np.array_equal(tile.physical_delta(), [[0, 1, 1], [1, 0, 0]])
    assert np.array_equal(tile.with_dataflow('conventional').physical_delta(), tile.delta)


def test_antidiagonal_transpose():
    delta = np.zeros((4, 4), dtype=int)
    delta[0, 3] = 1
    transposed = BitTile.from_delta(delta).antidiagonal_transpose()
    assert transposed.delta[3, 0] == 1
    assert transposed.n_active == 1


def test_antidiagonal_transpose_reversed():
    delta = np.zeros((3, 3), dtype=int)
    # physical position (0, 2) in a reversed tile is logical column 0
    delta[0, 0] = 1
    tile = BitTile.from_delta(delta, 'reversed')
    transposed = tile.antidiagonal_transpose()
    assert transposed.physical_delta()[2, 0] == 1
    assert transposed.antidiagonal_transpose() == tile


def test_antidiagonal_transpose_not_square():
    with pytest.raises(GeometryError):
        BitTile.from_delta(np.ones((2, 3))).antidiagonal_transpose()


def test_json(tmp_path):
    tile = BitTile.from_delta([[1, 0, 0, 1], [0, 1, 1, 0]], 'reversed', groups=[0, 1, 0, 1],
                              significances=[0, 0, 2, 2])
    data = tile.to_dict()
    assert data['active'] == [[0, 0], [0, 3], [1, 1], [1, 2]]
    assert data['groups'] == [0, 1, 0, 1]
    assert BitTile.from_dict(data) == tile

    tile.save_json(tmp_path / 'tile.json', scale=2.)
    assert BitTile.load_json(tmp_path / 'tile.json') == tile


def test_json_single_group():
    assert 'groups' not in BitTile.from_delta([[1, 0]]).to_dict()


def test_json_errors(tmp_path):
    with pytest.raises(DataError):
        BitTile.from_dict({'rows': 2, 'active': []})
    with pytest.raises(DataError):
        BitTile.from_dict({'rows': 2, 'cols': 2, 'active': [[2, 0]]})
    (tmp_path / 'broken.json').write_text('{"rows": 2,\n')
    with pytest.raises(DataError):
        BitTile.load_json(tmp_path / 'broken.json')
