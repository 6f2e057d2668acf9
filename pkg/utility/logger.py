"""
Named loggers for the sweeps, relations and CLI.

Each module asks for its own logger once (for example 'zero_neighbor_log').
Console output stays at INFO unless LWD_DEBUG is set, while the rotating file
at Config.LOG_FILE keeps the DEBUG trail of every sweep: block counts, worker
counts and cap refusals.

Functions:
- setup_logger(name, log_file=None): Return the named logger, attaching the
  console and rotating file handlers the first time only.
"""

import logging
from logging.handlers import RotatingFileHandler
import os

from config import Config

def setup_logger(name, log_file=None):
    """
    Sets up centralized logging, providing dual output to console and file
    with a rotating file handler to manage log sizes.

    Sweeps log their progress at DEBUG, so the file keeps the detail while the
    console only shows INFO and above (DEBUG too when Config.DEBUG is set).

    Parameters:
        name (str): Name of the logger.
        log_file (str): Path to the log file, Config.LOG_FILE when omitted.

    Returns:
        A configured logger instance with console and file handlers.
    """
    app_logger = logging.getLogger(name)
    if app_logger.handlers:
        return app_logger
    app_logger.setLevel(logging.DEBUG)

    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
        )

    console_handler = logging.StreamHandler()
    console_handler.setLevel(logging.DEBUG if Config.DEBUG else logging.INFO)
    console_handler.setFormatter(formatter)

    log_file = log_file or Config.LOG_FILE
    log_directory = os.path.dirname(log_file)
    if log_directory and not os.path.exists(log_directory):
        os.makedirs(log_directory, exist_ok=True)

    file_handler = RotatingFileHandler(
        log_file, maxBytes=1024*1024*1, backupCount=5 # 1MB file size, 5 backup files
        )
    file_handler.setLevel(logging.DEBUG)
    file_handler.setFormatter(formatter)

    app_logger.addHandler(console_handler)
    app_logger.addHandler(file_handler)

    return app_logger

# End of utility/logger.py
