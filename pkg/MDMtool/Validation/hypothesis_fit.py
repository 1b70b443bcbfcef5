"""
This document fits the measured nonideality factor of random tiles against the prediction of the Manhattan
Hypothesis and plots the scatter together with the histogram of the relative residuals.
The residual mean should stay within 2% and the standard deviation below 15%.
"""
from MDMtool import Crossbar, FitReport


def validate(n_tiles: int = 500, rows: int = 64, cols: int = 64, sparsity: float = 0.8, seed: int = 7,
             threads: int = None, plot: bool = True) -> FitReport:
    crossbar = Crossbar(threads=threads)
    report = crossbar.hypothesis_fit(n_tiles, rows, cols, sparsity, seed)
    print(f'Slope {report.slope:.4e}, intercept {report.intercept:.4e}, r {report.r_value:.4f}')
    print(f'Residuals: mean {report.mu:.3f}%, standard deviation {report.sigma:.3f}%')
    if plot:
        crossbar.print_fit(report)
    return report


if __name__ == "__main__":  # pragma: no cover
    validate()
