"""
This document contains the BitTile class, the binary active-cell matrix of one bit-sliced crossbar tile.
"""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np
from numpy.typing import ArrayLike

from MDMtool.VariableClasses.BaseClass import BaseClass, GeometryError, DataError
from MDMtool.VariableClasses.CrossbarGeometry import CrossbarGeometry, Dataflow


class BitTile(BaseClass):
    """
    Binary active-cell matrix of a crossbar tile together with the significance of every column.

    The matrix is indexed by row j and logical column c. Logical column c carries the weight 2^-e_c of
    weight group groups[c]. Within one group the significances are strictly increasing, so the higher-order
    bits come first.
    """

    __slots__ = 'geometry', 'delta', 'significances', 'groups'

    def __init__(self, geometry: CrossbarGeometry, delta: ArrayLike,
                 significances: ArrayLike = None, groups: ArrayLike = None):
        """

        Parameters
        ----------
        geometry : CrossbarGeometry
            Dimensions and dataflow of the tile
        delta : ArrayLike
            J x K matrix with 1 for an active cell and 0 otherwise
        significances : ArrayLike
            Exponent e_c of every logical column. Defaults to 0, 1, ..., K-1 (per group)
        groups : ArrayLike
            Index of the weight that every logical column belongs to. Defaults to a single weight per row.

        Raises
        ------
        GeometryError
            When the matrix does not match the geometry
        DataError
            When the matrix is not binary or the significances are not increasing within a group
        """
        delta = np.asarray(delta)
        if delta.shape != geometry.shape:
            raise GeometryError(f'The active-cell matrix has shape {delta.shape} but the geometry is {geometry.shape}.')
        if delta.size and not np.all((delta == 0) | (delta == 1)):
            raise DataError('The active-cell matrix should only contain zeros and ones.')

        groups = np.zeros(geometry.cols, dtype=np.int64) if groups is None else np.asarray(groups, dtype=np.int64)
        if groups.shape != (geometry.cols,):
            raise GeometryError(f'{groups.size} group indices were given for {geometry.cols} columns.')
        if significances is None:
            significances = np.zeros(geometry.cols, dtype=np.int64)
            for group in np.unique(groups):
                mask = groups == group
                significances[mask] = np.arange(np.count_nonzero(mask))
        significances = np.asarray(significances, dtype=np.int64)
        if significances.shape != (geometry.cols,):
            raise GeometryError(f'{significances.size} significances were given for {geometry.cols} columns.')
        for group in np.unique(groups):
            if np.any(np.diff(significances[groups == group]) <= 0):
                raise DataError('The significances should be strictly increasing within every weight group.')

        self.geometry: CrossbarGeometry = geometry
        self.delta: np.ndarray = delta.astype(np.int8)
        self.significances: np.ndarray = significances.copy()
        self.groups: np.ndarray = groups.copy()
        for array in (self.delta, self.significances, self.groups):
            array.setflags(write=False)

    @classmethod
    def from_delta(cls, delta: ArrayLike, dataflow: Dataflow | str = Dataflow.CONVENTIONAL, **kwargs) -> BitTile:
        """
        This function creates a tile whose geometry follows from the shape of the matrix.

        Parameters
        ----------
        delta : ArrayLike
            J x K binary matrix
        dataflow : Dataflow or str
            Orientation of the tile
        kwargs
            significances and/or groups

        Returns
        -------
        BitTile
        """
        delta = np.atleast_2d(np.asarray(delta))
        return cls(CrossbarGeometry(*delta.shape, dataflow), delta, **kwargs)

    @property
    def rows(self) -> int:
        return self.geometry.rows

    @property
    def cols(self) -> int:
        return self.geometry.cols

    @property
    def dataflow(self) -> Dataflow:
        return self.geometry.dataflow

    @property
    def n_active(self) -> int:
        return int(np.count_nonzero(self.delta))

    @property
    def n_groups(self) -> int:
        return int(np.unique(self.groups).size)

    @property
    def column_values(self) -> np.ndarray:
        """Weight 2^-e_c carried by every logical column."""
        return np.ldexp(1., -self.significances)

    def physical_delta(self) -> np.ndarray:
        """
        This function returns the active-cell matrix indexed by physical position (j, k), where k is the
        number of row-wire segments to the input rail.

        Returns
        -------
        np.ndarray
            J x K matrix
        """
        return self.delta[:, self.geometry.logical_column(np.arange(self.cols))]

    def distance_matrix(self) -> np.ndarray:
        return self.geometry.distance_matrix()

    def with_dataflow(self, dataflow: Dataflow | str) -> BitTile:
        """
        This function returns the same tile with another orientation. The data is not rewritten.
        """
        return BitTile(self.geometry.with_dataflow(dataflow), self.delta, self.significances, self.groups)

    def with_delta(self, delta: ArrayLike) -> BitTile:
        return BitTile(self.geometry, delta, self.significances, self.groups)

    def antidiagonal_transpose(self) -> BitTile:
        """
        This function swaps the distances to the input and output rail of every cell.
        The significances stay attached to their logical column.

        Returns
        -------
        BitTile
            Tile with an active cell at physical (k, j) for every active cell at physical (j, k)

        Raises
        ------
        GeometryError
            When the tile is not square
        """
        if not self.geometry.is_square:
            raise GeometryError(f'Only square tiles can be transposed, not a {self.rows}x{self.cols} tile.')
        transposed = self.physical_delta().T
        return self.with_delta(transposed[:, self.geometry.physical_column(np.arange(self.cols))])

    def to_dict(self) -> dict:
        """
        This function returns the JSON representation of the tile.

        Returns
        -------
        dict
            {"rows", "cols", "dataflow", "significances", "active"[, "groups"]}
        """
        data = self.geometry.to_dict()
        data['significances'] = self.significances.tolist()
        if np.any(self.groups != 0):
            data['groups'] = self.groups.tolist()
        data['active'] = np.argwhere(self.delta).tolist()
        return data

    @classmethod
    def from_dict(cls, data: dict) -> BitTile:
        """
        This function creates a tile from its JSON representation.

        Parameters
        ----------
        data : dict
            Dictionary as written by to_dict

        Returns
        -------
        BitTile

        Raises
        ------
        DataError
            When a key is missing or an active cell lies outside the tile
        """
        try:
            geometry = CrossbarGeometry(data['rows'], data['cols'], data.get('dataflow', 'conventional'))
            delta = np.zeros(geometry.shape, dtype=np.int8)
            active = np.asarray(data['active'], dtype=np.int64).reshape(-1, 2)
        except KeyError as error:
            raise DataError(f'The tile description misses the key {error}.')
        except (TypeError, ValueError) as error:
            raise DataError(f'The tile description is not valid: {error}')
        if active.size and (np.any(active < 0) or np.any(active >= np.array(geometry.shape))):
            raise DataError('An active cell lies outside the tile.')
        delta[active[:, 0], active[:, 1]] = 1
        return cls(geometry, delta, data.get('significances'), data.get('groups'))

    def save_json(self, path: str | Path, **metadata) -> None:
        """
        This function writes the tile to a JSON file. Extra keyword arguments are stored next to the tile.
        """
        data = self.to_dict()
        data.update(metadata)
        Path(path).write_text(json.dumps(data, indent=2))

    @classmethod
    def load_json(cls, path: str | Path) -> BitTile:
        try:
            data = json.loads(Path(path).read_text())
        except json.JSONDecodeError as error:
            raise DataError(f'{path}: line {error.lineno}: {error.msg}')
        return cls.from_dict(data)

    def __repr__(self):
        return f'Bit tile {self.rows}x{self.cols} ({self.dataflow.value}), {self.n_active} active cells'
