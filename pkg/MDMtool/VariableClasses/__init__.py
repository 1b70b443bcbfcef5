from .BaseClass import GeometryError, DataError, UnsupportedDistribution, SizeError, SolverError, FitError, \
    CalibrationError, ModelError
from .CrossbarGeometry import CrossbarGeometry, Dataflow
from .ResistanceParams import ResistanceParams
from .BitTile import BitTile
from .WeightMatrix import WeightMatrix
from .MdmPlan import MdmPlan
from .NoiseModel import NoiseModel
from .SimulationSetup import SimulationSetup
from .WeightDistribution import *
from .Result import RowScore, NfPrediction, NfMeasurement, NfReport, SparsityReport, FitReport, BenchmarkRow, \
    AccuracyReport
