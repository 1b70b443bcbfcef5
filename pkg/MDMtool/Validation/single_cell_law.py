"""
This document compares the measured nonideality factor of a single active cell with the first-order law
NF = d r / R_on, with d the Manhattan distance of the cell. Inactive devices are left open so only the active
cell conducts.
"""
import numpy as np

from MDMtool import BitTile, ResistanceParams
from MDMtool.Methods import measured_nf


def validate(distances: tuple = (1, 2, 5, 10, 20), size: int = 32) -> dict:
    params = ResistanceParams(r=2.5, R_on=3e5, R_off=np.inf)
    errors = {}
    for d in distances:
        # place the cell on the diagonal band j + k = d
        j = d // 2
        delta = np.zeros((size, size), dtype=int)
        delta[j, d - j] = 1
        measured = measured_nf(BitTile.from_delta(delta), params).aggregate
        predicted = d * params.r_over_ron
        errors[d] = abs(measured - predicted) / predicted
        print(f'd = {d:2d}: measured NF {measured:.6e}, first-order {predicted:.6e}, relative error {errors[d]:.2e}')
    return errors


if __name__ == "__main__":  # pragma: no cover
    validate()
