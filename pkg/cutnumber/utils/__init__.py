"""
Utility modules for the cutnumber package.
"""

from cutnumber.utils.logger import OperationTimer, get_logger, setup_logger

__all__ = ["get_logger", "setup_logger", "OperationTimer"]
