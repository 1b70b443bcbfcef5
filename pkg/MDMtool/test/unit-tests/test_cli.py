import json

import numpy as np
import pandas as pd
import pytest

from MDMtool.cli import main
from MDMtool.Methods import distance_sum
from MDMtool.VariableClasses import BitTile, MdmPlan


def _last_error(capsys) -> dict:
    return json.loads(capsys.readouterr().err.strip().splitlines()[-1])


def _write_tile(path, delta, dataflow='conventional'):
    BitTile.from_delta(delta, dataflow).save_json(path)
    return str(path)


def test_quantize(tmp_path):
    weights = tmp_path / 'weights.csv'
    weights.write_text('0.625\n0\n')
    output = tmp_path / 'tile.json'
    assert main(['quantize', str(weights), '--significances', '1', '2', '3', '-o', str(output)]) == 0
    data = json.loads(output.read_text())
    assert data['active'] == [[0, 0], [0, 2]]
    assert data['scale'] == 1
    assert data['significances'] == [1, 2, 3]


def test_quantize_empty_file(tmp_path, capsys):
    weights = tmp_path / 'weights.csv'
    weights.write_text('')
    assert main(['quantize', str(weights), '-o', str(tmp_path / 'tile.json')]) == 1
    error = _last_error(capsys)
    assert error['error'] == 'DataError'
    assert 'no rows' in error['message']
    assert not (tmp_path / 'tile.json').exists()


def test_quantize_malformed_file(tmp_path, capsys):
    weights = tmp_path / 'weights.csv'
    weights.write_text('0.5,0.25\n0.5,abc\n')
    assert main(['quantize', str(weights), '-o', str(tmp_path / 'tile.json')]) == 1
    assert 'line 2' in _last_error(capsys)['message']


def test_quantize_dequantize(tmp_path):
    weights = tmp_path / 'weights.csv'
    weights.write_text('0.5,0.75\n0.125,1.5\n')
    tile = tmp_path / 'tile.json'
    restored = tmp_path / 'restored.csv'
    assert main(['quantize', str(weights), '--bits', '4', '-o', str(tile)]) == 0
    assert main(['dequantize', str(tile), '-o', str(restored)]) == 0
    values = pd.read_csv(restored, header=None).to_numpy()
    assert np.allclose(values, [[0.5, 0.75], [0.125, 1.5]])


def test_map(tmp_path):
    tile = _write_tile(tmp_path / 'tile.json', [[1, 0, 0, 0], [1, 1, 1, 1], [0, 0, 0, 0], [1, 1, 0, 0]])
    plan = tmp_path / 'plan.json'
    mapped = tmp_path / 'mapped.json'
    assert main(['map', tile, '--plan', str(plan), '-o', str(mapped)]) == 0
    plan = MdmPlan.load_json(plan)
    mapped = BitTile.load_json(mapped)
    original = BitTile.load_json(tile)
    assert mapped.dataflow == plan.dataflow
    assert mapped.n_active == original.n_active == 8
    assert distance_sum(mapped) <= distance_sum(original)


def test_nf_empty_tile(tmp_path):
    tile = _write_tile(tmp_path / 'tile.json', np.zeros((3, 3)))
    output = tmp_path / 'nf.json'
    assert main(['nf', tile, '-o', str(output)]) == 0
    data = json.loads(output.read_text())
    assert data['predicted']['nf_sum'] == 0
    assert 'measured' not in data


def test_simulate(tmp_path):
    tile = _write_tile(tmp_path / 'tile.json', [[1, 1], [0, 1]])
    output = tmp_path / 'nf.json'
    netlist = tmp_path / 'tile.cir'
    assert main(['simulate', tile, '--netlist', str(netlist), '-o', str(output)]) == 0
    data = json.loads(output.read_text())
    assert data['measured']['aggregate'] > 0
    assert data['params']['r'] == 2.5
    assert netlist.read_text().strip().endswith('.end')


def test_simulate_r_zero(tmp_path):
    tile = _write_tile(tmp_path / 'tile.json', [[1, 1], [0, 1]])
    output = tmp_path / 'nf.json'
    assert main(['simulate', tile, '--r', '0', '-o', str(output)]) == 0
    data = json.loads(output.read_text())
    assert data['measured']['aggregate'] == 0
    assert data['predicted']['nf_sum'] == 0


def test_simulate_random_tile(tmp_path):
    output = tmp_path / 'nf.json'
    assert main(['simulate', '--rows', '6', '--cols', '5', '--sparsity', '0.5', '--seed', '3',
                 '-o', str(output)]) == 0
    assert json.loads(output.read_text())['geometry'] == {'rows': 6, 'cols': 5, 'dataflow': 'conventional'}


def test_simulate_mdm(tmp_path):
    tile = _write_tile(tmp_path / 'tile.json', [[0, 0, 0], [1, 1, 1], [1, 0, 0]])
    plain, mapped = tmp_path / 'plain.json', tmp_path / 'mapped.json'
    assert main(['nf', tile, '-o', str(plain)]) == 0
    assert main(['nf', tile, '--mdm', '-o', str(mapped)]) == 0
    predicted = [json.loads(path.read_text())['predicted']['nf_sum'] for path in (mapped, plain)]
    assert predicted[0] <= predicted[1]


@pytest.mark.parametrize('argv', [['simulate', '--rows', '4', '--cols', '4', '--mdm'],
                                  ['nf'],
                                  ['simulate', '--unknown-flag'],
                                  ['accuracy', '--eta', '0.001', '--eta-from', 'eta.json'],
                                  ['sparsity', '--dist', 'empirical'],
                                  ['frobnicate']])
def test_usage_errors(argv, tmp_path, capsys):
    assert main(argv + ['-o', str(tmp_path / 'out')]) == 2
    assert _last_error(capsys)['error'] == 'UsageError'


def test_tile_and_random_flags(tmp_path, capsys):
    tile = _write_tile(tmp_path / 'tile.json', [[1]])
    assert main(['nf', tile, '--rows', '2', '--cols', '2', '-o', str(tmp_path / 'nf.json')]) == 2


def test_tile_and_dataflow_flag(tmp_path, capsys):
    tile = _write_tile(tmp_path / 'tile.json', [[1, 0], [1, 1]])
    assert main(['simulate', tile, '--dataflow', 'reversed', '-o', str(tmp_path / 'nf.json')]) == 2
    assert _last_error(capsys)['error'] == 'UsageError'
    assert not (tmp_path / 'nf.json').exists()


def test_invalid_resistance(tmp_path, capsys):
    tile = _write_tile(tmp_path / 'tile.json', [[1]])
    assert main(['simulate', tile, '--r', '5000', '-o', str(tmp_path / 'nf.json')]) == 1
    assert _last_error(capsys)['error'] == 'ValueError'


def test_missing_file(tmp_path, capsys):
    assert main(['map', str(tmp_path / 'missing.json'), '-o', str(tmp_path / 'out.json')]) == 1
    assert _last_error(capsys)['error'] == 'FileNotFoundError'


def test_sparsity(tmp_path):
    output = tmp_path / 'sparsity.json'
    assert main(['sparsity', '--n', '10000', '--bits', '4', '-o', str(output)]) == 0
    data = json.loads(output.read_text())
    assert data['distribution'] == 'exponential'
    assert [column['k'] for column in data['columns']] == [0, 1, 2, 3]
    assert all(column['ok'] for column in data['columns'])


def test_sparsity_empirical(tmp_path, capsys):
    samples = tmp_path / 'samples.csv'
    samples.write_text('0.1\n0.2\n0.3\n')
    assert main(['sparsity', '--dist', 'empirical', '--samples', str(samples), '--n', '10000',
                 '-o', str(tmp_path / 'sparsity.json')]) == 1
    assert _last_error(capsys)['error'] == 'UnsupportedDistribution'


def test_fit_deterministic(tmp_path):
    outputs = []
    for threads in ('1', '3'):
        folder = tmp_path / threads
        folder.mkdir()
        assert main(['fit', '--tiles', '30', '--rows', '8', '--cols', '8', '--seed', '7', '--threads', threads,
                     '-o', str(folder / 'fit.json')]) == 0
        outputs.append(((folder / 'fit.json').read_bytes(), (folder / 'scatter.csv').read_bytes()))
    assert outputs[0] == outputs[1]
    scatter = pd.read_csv(tmp_path / '1' / 'scatter.csv')
    assert list(scatter.columns) == ['predicted_nf', 'measured_nf']
    assert len(scatter) == 30


def test_fit_invalid_sparsity(tmp_path, capsys):
    assert main(['fit', '--sparsity', '1.5', '-o', str(tmp_path / 'fit.json')]) == 1


def test_benchmark(tmp_path):
    output = tmp_path / 'benchmark.csv'
    assert main(['benchmark', '--tiles', '30', '--rows', '8', '--cols', '8', '-o', str(output)]) == 0
    frame = pd.read_csv(output)
    assert list(frame.columns) == ['config', 'mean_nf', 'reduction_pct', 'mean_predicted_nf']
    assert len(frame) == 4
    assert frame['reduction_pct'][0] == 0


def test_benchmark_too_few_tiles(tmp_path, capsys):
    assert main(['benchmark', '--tiles', '10', '--rows', '8', '--cols', '8', '-o', str(tmp_path / 'b.csv')]) == 1


def test_calibrate_and_accuracy(tmp_path):
    eta = tmp_path / 'eta.json'
    assert main(['calibrate', '--tiles', '10', '--rows', '16', '--cols', '8', '-o', str(eta)]) == 0
    data = json.loads(eta.read_text())
    assert data['eta'] > 0
    assert data['tiles'] == 10

    output = tmp_path / 'accuracy.csv'
    assert main(['accuracy', '--eta-from', str(eta), '--rows', '16', '--groups', '2', '--trials', '30',
                 '-o', str(output)]) == 0
    frame = pd.read_csv(output)
    assert len(frame) == 1
    assert np.isclose(frame['eta'][0], data['eta'])


def test_calibrate_too_few_tiles(tmp_path, capsys):
    assert main(['calibrate', '--tiles', '5', '--rows', '8', '--cols', '8', '-o', str(tmp_path / 'eta.json')]) == 1


def test_accuracy_sweep(tmp_path):
    output = tmp_path / 'accuracy.csv'
    assert main(['accuracy', '--eta', '0', '0.001', '--rows', '16', '--groups', '2', '--trials', '30',
                 '-o', str(output)]) == 0
    frame = pd.read_csv(output)
    assert list(frame['eta']) == [0, 0.001]
    assert frame['baseline_err'][0] == 0
