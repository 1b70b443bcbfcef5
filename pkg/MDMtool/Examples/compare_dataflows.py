"""
This example compares the mean nonideality of DNN-like tiles for both dataflows, with and without the
Manhattan Distance Mapping, for a growing wire resistance.
"""
import matplotlib.pyplot as plt
import numpy as np

from MDMtool import Crossbar, HalfNormal, ResistanceParams
from MDMtool.Experiments import gen_dnn_like_tile


def compare_dataflows(n_tiles: int = 30, rows: int = 32, cols: int = 32, bits: int = 8,
                      wire_resistances: tuple = (1., 2.5, 5.)) -> np.ndarray:
    tiles = [gen_dnn_like_tile(HalfNormal(1.), rows, cols, seed=11, index=index, bits=bits)
             for index in range(n_tiles)]

    results = []
    for r in wire_resistances:
        rows_benchmark = Crossbar(ResistanceParams(r=r)).benchmark(tiles)
        results.append([row.mean_nf for row in rows_benchmark])
        labels = [row.label for row in rows_benchmark]
    results = np.array(results)

    fig, ax = plt.subplots()
    for column, label in enumerate(labels):
        ax.plot(wire_resistances, results[:, column], marker='o', label=label)
    ax.set_xlabel('Wire segment resistance [Ohm]')
    ax.set_ylabel('Mean NF')
    ax.legend()
    plt.show()
    return results


if __name__ == "__main__":  # pragma: no cover
    compare_dataflows()
