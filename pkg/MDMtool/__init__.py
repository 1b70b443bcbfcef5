import pathlib

from MDMtool.Crossbar import Crossbar
from MDMtool.VariableClasses import *
FOLDER: pathlib.Path = pathlib.Path(__file__).parent  # solve problem with importing MDMtool from sub-folders
from MDMtool.logger import mdm_logger
