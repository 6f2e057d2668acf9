import sys
import os
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import logging
from logging.handlers import RotatingFileHandler
import pytest
from utility.logger import setup_logger


def test_setup_logger_writes_debug_to_file(tmp_path):
    log_file = tmp_path / 'nested' / 'lwd.log'
    logger = setup_logger('test_file_log', log_file=str(log_file))
    logger.debug("Sweep of %s codewords", 16)
    for handler in logger.handlers:
        handler.flush()
    assert "test_file_log - DEBUG - Sweep of 16 codewords" in log_file.read_text()


def test_setup_logger_does_not_stack_handlers(tmp_path):
    log_file = str(tmp_path / 'lwd.log')
    first = setup_logger('test_repeat_log', log_file=log_file)
    second = setup_logger('test_repeat_log', log_file=log_file)
    assert first is second
    assert len(second.handlers) == 2
    assert any(isinstance(h, RotatingFileHandler) for h in second.handlers)


def test_console_handler_level(tmp_path):
    logger = setup_logger('test_console_log', log_file=str(tmp_path / 'lwd.log'))
    console = [h for h in logger.handlers if not isinstance(h, RotatingFileHandler)]
    assert console[0].level in (logging.INFO, logging.DEBUG)


if __name__ == "__main__":
    pytest.main()
