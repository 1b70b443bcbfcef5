"""
This file contains all the main functionalities of MDMtool being:
    * slicing a weight matrix into a bit tile
    * predicting the nonideality factor with the Manhattan Hypothesis
    * measuring the nonideality factor with the mesh solver
    * applying the Manhattan Distance Mapping
    * plotting the nonideality per column
"""

import numpy as np

# import all the relevant functions
from MDMtool import Crossbar, ResistanceParams, WeightMatrix
from MDMtool.Methods import quantize, stack_groups


def main_functionalities():
    # resistance of a wire segment, the on- and off-state of a device (Ohm) and the row drive voltage (V)
    params = ResistanceParams(r=2.5, R_on=3e5, R_off=3e6, V_in=1)

    # a small layer with 32 rows and two weights per row
    weights = WeightMatrix(np.random.default_rng(3).standard_normal((32, 2)) * 0.3)

    # slice the magnitudes into 8 bits per weight and put both weights next to each other
    tiles, scale = quantize(weights, bits=8)
    tile = stack_groups(tiles)
    print(tile, "with scale", scale)

    # create the crossbar object
    crossbar = Crossbar(params)

    # one can activate or deactive the logger, by default it is deactivated
    # crossbar.activate_logger()
    # crossbar.deactivate_logger()

    # analytical prediction and exact solve
    report = crossbar.report(tile)
    print("Predicted NF: ", report.predicted.nf_sum)
    print("Measured NF: ", report.measured.aggregate)

    # remap the rows and pick the dataflow
    plan, mapped = crossbar.map(tile)
    print("Dataflow after mapping: ", plan.dataflow.value)
    print("Predicted NF after mapping: ", crossbar.predict(mapped).nf_sum)
    print("Measured NF after mapping: ", crossbar.measure(mapped).aggregate)

    # the mapped tile is only a different placement of the same bits
    print("Row order: ", plan.row_perm.tolist())

    # plot the nonideality of every column before and after the mapping
    crossbar.print_column_nf(tile)
    crossbar.print_column_nf(mapped)
    return report.measured.aggregate, crossbar.measure(mapped).aggregate


if __name__ == "__main__":  # pragma: no cover
    main_functionalities()
