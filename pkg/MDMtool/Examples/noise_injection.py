"""
This example sweeps the noise coefficient eta and compares the matrix-vector error of the identity placement,
the full mapping and the row sort on a sampled layer.
"""
import matplotlib.pyplot as plt
import numpy as np

from MDMtool import HalfNormal
from MDMtool.Experiments import accuracy_sweep, gen_dnn_like_weights


def noise_injection(rows: int = 64, groups: int = 8, trials: int = 50):
    weights = gen_dnn_like_weights(HalfNormal(1.), rows, groups, seed=2)
    etas = np.linspace(0, 4e-3, 5)
    frame = accuracy_sweep(weights, etas, trials=trials, seed=2, bits=4)

    fig, ax = plt.subplots()
    ax.plot(frame['eta'], frame['baseline_err'], 'k-o', label='Identity')
    ax.plot(frame['eta'], frame['mdm_err'], 'b-o', label='MDM')
    ax.plot(frame['eta'], frame['row_sort_err'], 'g-o', label='Row sort')
    ax.set_xlabel('eta')
    ax.set_ylabel('Relative output error')
    ax.legend()
    plt.show()
    return frame


if __name__ == "__main__":  # pragma: no cover
    noise_injection()
