"""
logger package
"""
from MDMtool.logger.mdm_logger import mdm_logger
