"""
Tile-level parallelism for the experiments.
"""
from __future__ import annotations

from multiprocessing.pool import ThreadPool
from typing import Callable, Iterable

import numpy as np


def tile_rng(seed: int, index: int) -> np.random.Generator:
    """
    This function returns the random number generator of one tile or trial. The stream only depends on the
    master seed and the index, so results do not depend on the order in which the tiles are handled.

    Parameters
    ----------
    seed : int
        Master seed
    index : int
        Tile or trial index

    Returns
    -------
    np.random.Generator
    """
    return np.random.default_rng([seed, index])


def parallel_map(func: Callable, items: Iterable, threads: int = None) -> list:
    """
    This function applies func to every item, on a pool of threads when more than one thread is requested.
    The order of the results is the order of the items.

    Parameters
    ----------
    func : Callable
        Function of one argument
    items : Iterable
        Arguments
    threads : int
        Number of threads. None or 1 runs sequentially

    Returns
    -------
    list
        Results
    """
    items = list(items)
    if threads is None or threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ThreadPool(min(threads, len(items))) as pool:
        return pool.map(func, items)
