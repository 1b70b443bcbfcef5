"""
Writers for the experiment outputs. Floats are written with full precision, so reruns with the same seed give
byte-identical files.
"""
from __future__ import annotations

import json
from pathlib import Path

import pandas as pd


def write_json(data: dict, path: str | Path) -> None:
    """
    This function writes a report dictionary to a JSON file.

    Parameters
    ----------
    data : dict
        Report, e.g. the result of FitReport.to_dict()
    path : str or Path
        Output file

    Returns
    -------
    None
    """
    Path(path).write_text(json.dumps(data, indent=2) + '\n')


def write_csv(frame: pd.DataFrame, path: str | Path) -> None:
    """
    This function writes a table to a CSV file without index.

    Parameters
    ----------
    frame : pd.DataFrame
        Table
    path : str or Path
        Output file

    Returns
    -------
    None
    """
    frame.to_csv(path, index=False, float_format='%.17g', lineterminator='\n')
