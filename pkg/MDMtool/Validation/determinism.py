"""
This document runs the hypothesis fit and the benchmark twice through the command line, once on a single thread
and once on four threads, and checks that the output files are byte-identical.
"""
import tempfile
from pathlib import Path

from MDMtool.cli import main


def validate(tiles: int = 500, rows: int = 64, cols: int = 64, benchmark_tiles: int = 100, seed: int = 7) -> bool:
    identical = True
    with tempfile.TemporaryDirectory() as folder:
        folder = Path(folder)
        for threads in (1, 4):
            common = ['--seed', str(seed), '--threads', str(threads)]
            main(['fit', '--tiles', str(tiles), '--rows', str(rows), '--cols', str(cols), '--sparsity', '0.8',
                  '-o', str(folder / f'fit-{threads}.json'), '--scatter', str(folder / f'scatter-{threads}.csv')]
                 + common)
            main(['benchmark', '--tiles', str(benchmark_tiles), '--rows', str(rows), '--cols', str(cols),
                  '-o', str(folder / f'benchmark-{threads}.csv')] + common)
        for name in ('fit-{}.json', 'scatter-{}.csv', 'benchmark-{}.csv'):
            same = (folder / name.format(1)).read_bytes() == (folder / name.format(4)).read_bytes()
            print(f'{name.format("N")}: {"identical" if same else "different"}')
            identical &= same
    return identical


if __name__ == "__main__":  # pragma: no cover
    validate()
