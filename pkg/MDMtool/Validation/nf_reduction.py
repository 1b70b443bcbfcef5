"""
This document measures the mean nonideality factor of DNN-like tiles for both dataflows, with and without the
Manhattan Distance Mapping. Every row stores eight weights of eight bits drawn from a half-normal distribution.
"""
from MDMtool import BenchmarkRow, Crossbar, HalfNormal
from MDMtool.Experiments import gen_dnn_like_tile


def validate(n_tiles: int = 100, rows: int = 64, cols: int = 64, bits: int = 8, sigma: float = 1., seed: int = 0,
             threads: int = None) -> list[BenchmarkRow]:
    tiles = [gen_dnn_like_tile(HalfNormal(sigma), rows, cols, seed, index, bits) for index in range(n_tiles)]
    results = Crossbar(threads=threads).benchmark(tiles)
    for row in results:
        print(row)
    return results


if __name__ == "__main__":  # pragma: no cover
    validate()
