"""
Script to create the MDMtool logger for the console and the text file
"""
import logging
import os
from pathlib import Path, PurePath


class CustomFormatter(logging.Formatter):
    """
    Class to create a special console coloring of the messages
    """
    # define colors
    grey = '\x1b[38;21m'
    blue = '\x1b[38;5;39m'
    yellow = '\x1b[38;5;226m'
    red = '\x1b[38;5;196m'
    bold_red = '\x1b[31;1m'
    white = '\x1b[37;1m'
    reset = '\x1b[0m'

    def __init__(self, fmt: str):
        """

        Parameters
        ----------
        fmt : str
            Format of the log message
        """
        super().__init__(fmt=fmt)
        self.fmt = fmt
        self.FORMATS = {
            logging.DEBUG: self.grey + self.fmt + self.reset,
            logging.INFO: self.white + self.fmt + self.reset,
            logging.WARNING: self.yellow + self.fmt + self.reset,
            logging.ERROR: self.red + self.fmt + self.reset,
            logging.CRITICAL: self.bold_red + self.fmt + self.reset
        }

    def format(self, record: logging.LogRecord) -> str:
        """
        Formats the record.

        Parameters
        ----------
        record: logging.LogRecord
            record to be formatted

        Returns
        -------
        str
            Formatted log message
        """
        log_fmt = self.FORMATS.get(record.levelno, self.blue + self.fmt + self.reset)
        formatter = logging.Formatter(log_fmt, datefmt='%Y-%m-%d %H:%M:%S')
        return formatter.format(record)


def add_logging_level(level_name: str, level_num: int, method_name: str = None) -> None:
    """
    Adds a new logging level to the `logging` module and to the currently configured logging class.
    Nothing is changed when the level already exists, so the package can be re-imported safely.

    Parameters
    ----------
    level_name : str
        Name of the level (e.g. 'MAIN_INFO')
    level_num : int
        Numeric value of the level
    method_name : str
        Name of the convenience method. Defaults to level_name.lower()

    Returns
    -------
    None
    """
    method_name = method_name or level_name.lower()
    if hasattr(logging, level_name):
        return

    def log_for_level(self, message, *args, **kwargs):
        if self.isEnabledFor(level_num):
            self._log(level_num, message, args, **kwargs)

    def log_to_root(message, *args, **kwargs):
        logging.log(level_num, message, *args, **kwargs)

    logging.addLevelName(level_num, level_name)
    setattr(logging, level_name, level_num)
    setattr(logging.getLoggerClass(), method_name, log_for_level)
    setattr(logging, method_name, log_to_root)


add_logging_level('MAIN_INFO', logging.INFO - 5)
# create a custom formatter for the logger using time - name - level - message and filename - line number as format
log_format = CustomFormatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s (%(filename)s:%(lineno)d)")
# create MDMtool logger and set level to info
mdm_logger = logging.getLogger('MDMtool')
mdm_logger.setLevel(logging.INFO)
# get the log path file as documents/MDMtool folder, unless overwritten by the environment
log_file_path = Path(os.environ.get('MDMTOOL_LOG_DIR', PurePath(Path.home(), 'Documents/MDMtool')))
try:
    log_file_path.mkdir(parents=True, exist_ok=True)
    # add a text logger
    file_handler = logging.FileHandler(log_file_path.joinpath('MDMtool.log'), mode='w')
    file_handler.setFormatter(log_format)
    mdm_logger.addHandler(file_handler)
except OSError:  # pragma: no cover
    pass
# add a console logger for info
console_handler = logging.StreamHandler()
console_handler.setFormatter(log_format)
mdm_logger.addHandler(console_handler)
