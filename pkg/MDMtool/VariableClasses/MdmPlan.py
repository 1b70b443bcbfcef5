"""
This document contains the MdmPlan class, the invertible remapping produced by Manhattan Distance Mapping.
"""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np
from numpy.typing import ArrayLike

from MDMtool.VariableClasses.BaseClass import BaseClass, DataError
from MDMtool.VariableClasses.CrossbarGeometry import Dataflow


class MdmPlan(BaseClass):
    """
    Row permutation plus dataflow orientation.

    Logical row rho is placed at physical row row_perm[rho]. The orientation of the tile before the plan is
    kept in source_dataflow so the plan can be inverted exactly.
    """

    __slots__ = 'row_perm', 'dataflow', 'source_dataflow'

    def __init__(self, row_perm: ArrayLike, dataflow: Dataflow | str = Dataflow.REVERSED,
                 source_dataflow: Dataflow | str = Dataflow.CONVENTIONAL):
        """

        Parameters
        ----------
        row_perm : ArrayLike
            Physical row of every logical row
        dataflow : Dataflow or str
            Orientation after the plan is applied
        source_dataflow : Dataflow or str
            Orientation before the plan is applied

        Raises
        ------
        DataError
            When row_perm is not a permutation of 0..J-1
        """
        row_perm = np.asarray(row_perm, dtype=np.int64)
        if row_perm.ndim != 1 or not np.array_equal(np.sort(row_perm), np.arange(row_perm.size)):
            raise DataError(f'The row permutation {row_perm.tolist()} is not a bijection.')
        self.row_perm: np.ndarray = row_perm.copy()
        self.row_perm.setflags(write=False)
        self.dataflow: Dataflow = Dataflow.from_string(dataflow)
        self.source_dataflow: Dataflow = Dataflow.from_string(source_dataflow)

    @classmethod
    def identity(cls, rows: int, dataflow: Dataflow | str = Dataflow.CONVENTIONAL) -> MdmPlan:
        return cls(np.arange(rows), dataflow, dataflow)

    @property
    def rows(self) -> int:
        return self.row_perm.size

    @property
    def inverse_perm(self) -> np.ndarray:
        """Logical row placed at every physical row."""
        return np.argsort(self.row_perm)

    @property
    def is_identity(self) -> bool:
        return np.array_equal(self.row_perm, np.arange(self.rows)) and self.dataflow is self.source_dataflow

    def to_dict(self) -> dict:
        return {'row_perm': self.row_perm.tolist(), 'dataflow': self.dataflow.value,
                'source_dataflow': self.source_dataflow.value}

    @classmethod
    def from_dict(cls, data: dict) -> MdmPlan:
        try:
            return cls(data['row_perm'], data.get('dataflow', 'reversed'),
                       data.get('source_dataflow', 'conventional'))
        except KeyError as error:
            raise DataError(f'The plan description misses the key {error}.')

    def save_json(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_dict(), indent=2))

    @classmethod
    def load_json(cls, path: str | Path) -> MdmPlan:
        try:
            return cls.from_dict(json.loads(Path(path).read_text()))
        except json.JSONDecodeError as error:
            raise DataError(f'{path}: line {error.lineno}: {error.msg}')

    def __repr__(self):
        return f'MDM plan\n\tRow permutation: {self.row_perm.tolist()}\n\t' \
               f'Dataflow: {self.source_dataflow.value} -> {self.dataflow.value}'
