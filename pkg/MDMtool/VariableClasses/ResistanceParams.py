"""
This document contains the variable class for the resistance parameters of the crossbar.
"""
from __future__ import annotations

import math

from MDMtool.VariableClasses.BaseClass import BaseClass


class ResistanceParams(BaseClass):
    """
    Contains the wire and device resistances and the drive voltage of a crossbar.
    """

    __slots__ = 'r', 'R_on', 'R_off', 'V_in'

    # the first-order model needs r << R_on
    MAX_R_RATIO: float = 0.01

    def __init__(self, r: float = 2.5, R_on: float = 3e5, R_off: float = 3e6, V_in: float = 1.0):
        """

        Parameters
        ----------
        r : float
            Resistance of one wire segment between two adjacent crosspoints [Ohm]
        R_on : float
            Resistance of an active device [Ohm]
        R_off : float
            Resistance of an inactive device [Ohm]. Infinity means that inactive devices are open.
        V_in : float
            Row drive voltage [V]

        Raises
        ------
        ValueError
            When 0 <= r < R_on/100 and R_on < R_off do not hold
        """
        if not r >= 0 or not math.isfinite(r):
            raise ValueError(f'The wire resistance {r} should be a finite, non-negative value.')
        if not 0 < R_on < math.inf:
            raise ValueError(f'The on-resistance {R_on} should be a finite, positive value.')
        if not R_off > R_on:
            raise ValueError(f'The off-resistance {R_off} should be larger than the on-resistance {R_on}.')
        if r >= R_on * ResistanceParams.MAX_R_RATIO:
            raise ValueError(f'The wire resistance {r} should be smaller than R_on/100 = {R_on / 100}.')
        if not math.isfinite(V_in):
            raise ValueError(f'The drive voltage {V_in} should be finite.')
        self.r: float = float(r)
        self.R_on: float = float(R_on)
        self.R_off: float = float(R_off)
        self.V_in: float = float(V_in)

    @property
    def r_over_ron(self) -> float:
        return self.r / self.R_on

    @property
    def g_on(self) -> float:
        return 1. / self.R_on

    @property
    def g_off(self) -> float:
        # 1/inf = 0: an open device
        return 1. / self.R_off

    def with_r(self, r: float) -> ResistanceParams:
        return ResistanceParams(r, self.R_on, self.R_off, self.V_in)

    def to_dict(self) -> dict:
        return {'r': self.r, 'R_on': self.R_on, 'R_off': self.R_off, 'V_in': self.V_in}

    def __repr__(self):
        return f'Resistance parameters\n\tWire segment resistance [Ohm]: {self.r}\n\t' \
               f'On-resistance [Ohm]: {self.R_on}\n\tOff-resistance [Ohm]: {self.R_off}\n\t' \
               f'Drive voltage [V]: {self.V_in}'
