"""
This document calibrates the noise coefficient eta. First on deficits built from eta = 1e-3 itself, which should
be recovered exactly, then on deficits measured with the mesh solver. The measured calibration uses DNN-like
tiles with 128 rows, since eta grows with the length of the wires. The value at the 64x64 experiment default is
printed next to it, since it lies just below 2e-4.
"""
import numpy as np

from MDMtool import HalfNormal, ResistanceParams
from MDMtool.Experiments import calibrate_eta, fit_eta, gen_dnn_like_tile, gen_random_tile, unit_deficits


def synthetic(eta: float = 1e-3, n_tiles: int = 10, seed: int = 0) -> float:
    params = ResistanceParams()
    unit = np.concatenate([unit_deficits(gen_random_tile(32, 32, 0.8, seed, index), params)
                           for index in range(n_tiles)])
    return fit_eta(unit, eta * unit)


def calibrated(n_tiles: int, size: int, bits: int, seed: int) -> float:
    tiles = [gen_dnn_like_tile(HalfNormal(1.), size, size, seed, index, bits) for index in range(n_tiles)]
    eta = calibrate_eta(tiles).eta
    print(f'Calibrated eta on {n_tiles} tiles of {size}x{size}: {eta:.4e} '
          f'({"inside" if 2e-4 <= eta <= 1e-2 else "outside"} [2e-4, 1e-2])')
    return eta


def validate(n_tiles: int = 10, size: int = 128, bits: int = 8, seed: int = 0,
             default_size: int = 64) -> tuple[float, float]:
    recovered = synthetic()
    print(f'Synthetic eta 1e-3 recovered as {recovered:.12e}')
    calibrated(n_tiles, default_size, bits, seed)
    eta = calibrated(n_tiles, size, bits, seed)
    return recovered, eta


if __name__ == "__main__":  # pragma: no cover
    validate()
