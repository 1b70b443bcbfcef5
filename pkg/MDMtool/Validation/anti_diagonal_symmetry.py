"""
This document checks that the measured nonideality factor of a square tile does not change when the distances to
the input and output rail of every cell are swapped. The gap should stay below 1e-6 for random 16x16 tiles.
"""
import numpy as np

from MDMtool import ResistanceParams, SimulationSetup
from MDMtool.Experiments import gen_random_tile
from MDMtool.Methods import symmetry_check


def validate(n_tiles: int = 50, size: int = 16, sparsity: float = 0.8, seed: int = 0) -> float:
    params = ResistanceParams()
    setup = SimulationSetup(solver='dense')
    gaps = np.array([symmetry_check(gen_random_tile(size, size, sparsity, seed, index), params, setup)[2]
                     for index in range(n_tiles)])
    print(f'Largest relative gap over {n_tiles} tiles of {size}x{size}: {np.max(gaps):.3e}')
    return float(np.max(gaps))


if __name__ == "__main__":  # pragma: no cover
    validate()
