"""
This document checks that the Manhattan Distance Mapping reaches the smallest predicted nonideality over every
row permutation and both orientations, by exhaustive search on small random tiles.
"""
from MDMtool import ResistanceParams
from MDMtool.Experiments import gen_random_tile, tile_rng
from MDMtool.Methods import analytic_nf, brute_force_optimal_nf, mdm_map


def validate(n_tiles: int = 200, max_rows: int = 7, seed: int = 0) -> int:
    params = ResistanceParams()
    mismatches = 0
    for index in range(n_tiles):
        rows, cols = tile_rng(seed, index).integers(1, max_rows + 1, size=2)
        tile = gen_random_tile(int(rows), int(cols), 0.5, seed + 1, index)
        mapped = mdm_map(tile)[1]
        if analytic_nf(mapped, params).nf_sum != brute_force_optimal_nf(tile, params)[0]:
            mismatches += 1
    print(f'{mismatches} of {n_tiles} tiles differ from the exhaustive optimum.')
    return mismatches


if __name__ == "__main__":  # pragma: no cover
    validate()
