"""
Module: config.py

Holds configuration settings for the local weight distribution toolkit.
"""

import os

class Config:
    """
    Configuration settings for the toolkit.

    Caps guard the exponential sweeps; every cap can be lifted per call
    (``force=True``) or from the command line (``--force``).
    """
    DEBUG = os.environ.get('LWD_DEBUG', 'False') == 'True'
    LOG_FILE = os.environ.get('LWD_LOG_FILE', 'logs/lwd.log')
    ENUMERATION_CAP = int(os.environ.get('LWD_ENUMERATION_CAP', '30')) # max k for 2^k sweeps
    SUPPORT_SUBCODE_CAP = int(os.environ.get('LWD_SUPPORT_SUBCODE_CAP', str(2 ** 20)))
    LENGTH_CAP = int(os.environ.get('LWD_LENGTH_CAP', '4096'))
    WORKERS = int(os.environ.get('LWD_WORKERS', '1')) # process pool size for sweeps
    PARTITIONS_PER_WORKER = int(os.environ.get('LWD_PARTITIONS_PER_WORKER', '4'))
    DEFAULT_SEED = int(os.environ.get('LWD_SEED', '0'))
