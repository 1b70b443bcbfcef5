import pytest

import matplotlib.pyplot as plt
import numpy as np


def test_anti_diagonal_symmetry():
    from MDMtool.Validation.anti_diagonal_symmetry import validate
    assert validate(5, 8) < 1e-6


def test_single_cell_law():
    from MDMtool.Validation.single_cell_law import validate
    errors = validate((1, 4, 10), 16)
    assert all(error < 1e-2 for error in errors.values())


def test_mdm_optimality():
    from MDMtool.Validation.mdm_optimality import validate
    assert validate(30, 5) == 0


def test_sparsity_bound():
    from MDMtool.Validation.sparsity_bound import validate
    exponential, half_normal, exact = validate(10 ** 5, 6)
    assert exponential.all_ok and half_normal.all_ok
    assert abs(exponential.p_hat[0] - exact) < 0.01


def test_eta_calibration_synthetic():
    from MDMtool.Validation.eta_calibration import synthetic
    assert np.isclose(synthetic(), 1e-3, rtol=1e-9)


def test_eta_calibration_reports_both_sizes(capsys):
    from MDMtool.Validation.eta_calibration import validate
    recovered, eta = validate(10, 16, 4, default_size=8)
    output = capsys.readouterr().out
    assert 'tiles of 8x8' in output and 'tiles of 16x16' in output
    assert eta > 0


def test_accuracy_criterion():
    from MDMtool import AccuracyReport
    from MDMtool.Validation.accuracy_proxy import mdm_improves
    # lower mean error but only two trials out of three improved
    assert not mdm_improves(AccuracyReport(1e-3, [2., 2., 2.], [1., 1., 3.], [1., 1., 1.]))
    assert mdm_improves(AccuracyReport(1e-3, [2.] * 20, [1.] * 19 + [3.], [1.] * 20))
    assert not mdm_improves(AccuracyReport(1e-3, [1.] * 20, [1.] * 20, [1.] * 20))


def test_hypothesis_fit(monkeypatch):
    monkeypatch.setattr(plt, 'show', lambda: None)
    from MDMtool.Validation.hypothesis_fit import validate
    report = validate(30, 8, 8)
    assert report.n_tiles == 30
    assert report.slope > 0 and report.r_value > 0


def test_determinism():
    from MDMtool.Validation.determinism import validate
    assert validate(30, 8, 8, 30)


@pytest.mark.slow
def test_hypothesis_fit_full(monkeypatch):
    monkeypatch.setattr(plt, 'show', lambda: None)
    from MDMtool.Validation.hypothesis_fit import validate
    report = validate()
    assert abs(report.mu) <= 2
    assert report.sigma <= 15


@pytest.mark.slow
def test_nf_reduction():
    from MDMtool.Validation.nf_reduction import validate
    rows = validate()
    assert rows[3].reduction_pct >= 20
    assert rows[3].mean_nf <= rows[2].mean_nf <= rows[0].mean_nf


@pytest.mark.slow
def test_eta_calibration(capsys):
    from MDMtool.Validation.eta_calibration import validate
    recovered, eta = validate()
    assert 2e-4 <= eta <= 1e-2
    assert 'tiles of 64x64' in capsys.readouterr().out


@pytest.mark.slow
def test_accuracy_proxy():
    from MDMtool.Validation.accuracy_proxy import mdm_improves, validate
    report = validate()
    assert report.row_sort_err < report.baseline_err
    if not mdm_improves(report):
        pytest.xfail(f'full MDM mean error {report.mdm_err:.4e} against {report.baseline_err:.4e} for the identity '
                     f'mapping, {report.improved_fraction:.0%} of the trials improved or tied')


@pytest.mark.slow
def test_anti_diagonal_symmetry_full():
    from MDMtool.Validation.anti_diagonal_symmetry import validate
    assert validate() < 1e-6


@pytest.mark.slow
def test_sparsity_bound_full():
    from MDMtool.Validation.sparsity_bound import validate
    exponential, half_normal, exact = validate()
    assert exponential.all_ok and half_normal.all_ok
    assert abs(exact - 0.3775) < 1e-4
    assert abs(exponential.p_hat[0] - exact) < 0.005
