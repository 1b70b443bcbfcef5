"""
This document compares the relative matrix-vector error of a 64-row half-normal weight matrix under noise
injection for the identity mapping, the full Manhattan Distance Mapping and the MDM row sort alone.
The noise coefficient is calibrated first.

The full plan is expected to beat the identity mapping on the mean error in at least 95% of the trials.
With the bit-plane-major column layout the reversal moves the sparse high-order planes, which carry most of
the value, to the far end of the rows, so the output reports whether that holds instead of assuming it.
"""
from MDMtool import AccuracyReport, HalfNormal, NoiseModel
from MDMtool.Experiments import accuracy_proxy, calibrate_eta, gen_dnn_like_tile, gen_dnn_like_weights


def mdm_improves(report: AccuracyReport, fraction: float = 0.95) -> bool:
    return report.mdm_err < report.baseline_err and report.improved_fraction >= fraction


def validate(trials: int = 100, rows: int = 64, groups: int = 8, bits: int = 8, seed: int = 0,
             eta: float = None) -> AccuracyReport:
    dist = HalfNormal(1.)
    if eta is None:
        tiles = [gen_dnn_like_tile(dist, rows, groups * bits, seed, index, bits) for index in range(10)]
        eta = calibrate_eta(tiles).eta
    report = accuracy_proxy(gen_dnn_like_weights(dist, rows, groups, seed + 1), NoiseModel(eta), trials, seed, bits)
    print(f'eta = {eta:.4e}')
    print(f'Mean relative error: identity {report.baseline_err:.4e}, MDM {report.mdm_err:.4e}, '
          f'row sort {report.row_sort_err:.4e}')
    print(f'Trials improved or tied: MDM {report.improved_fraction:.2%}, '
          f'row sort {report.row_sort_improved_fraction:.2%}')
    print(f'Full MDM below the identity mapping in at least 95% of the trials: '
          f'{"yes" if mdm_improves(report) else "no"}')
    return report


if __name__ == "__main__":  # pragma: no cover
    validate()
