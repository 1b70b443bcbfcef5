import pytest

import matplotlib.pyplot as plt
import numpy as np


def test_main_functionalities(monkeypatch):
    monkeypatch.setattr(plt, 'show', lambda: None)
    from MDMtool.Examples.main_functionalities import main_functionalities
    before, after = main_functionalities()
    assert 0 < after < before


def test_compare_dataflows(monkeypatch):
    monkeypatch.setattr(plt, 'show', lambda: None)
    from MDMtool.Examples.compare_dataflows import compare_dataflows
    results = compare_dataflows(30, 8, 8)
    assert results.shape == (3, 4)
    # the nonideality grows with the wire resistance in every configuration
    assert np.all(np.diff(results, axis=0) > 0)


@pytest.mark.slow
def test_compare_dataflows_full(monkeypatch):
    monkeypatch.setattr(plt, 'show', lambda: None)
    from MDMtool.Examples.compare_dataflows import compare_dataflows
    results = compare_dataflows()
    assert np.all(results[:, 3] < results[:, 0])


def test_bit_sparsity(monkeypatch):
    monkeypatch.setattr(plt, 'show', lambda: None)
    from MDMtool.Examples.bit_sparsity import bit_sparsity
    reports = bit_sparsity(10 ** 4, 6)
    assert set(reports) == {'Exponential(2)', 'HalfNormal(0.5)'}


def test_noise_injection(monkeypatch):
    monkeypatch.setattr(plt, 'show', lambda: None)
    from MDMtool.Examples.noise_injection import noise_injection
    frame = noise_injection(16, 2, 30)
    assert frame['baseline_err'][0] == 0
    assert np.all(np.diff(frame['baseline_err']) > 0)
