"""
cutnumber: exact certificates for cut number and corank obstructions of 3-manifold groups.

The package provides Laurent polynomial linear algebra, free group calculus, free metabelian
and free nilpotent quotients, Alexander module ranks of infinite cyclic covers, and the
relation matrices of a family of 3-manifolds with cut number one.
"""

__version__ = "0.1.0"
TOOL_NAME = "cutnumber"

from cutnumber.utils.logger import setup_logger  # noqa: E402

__all__ = ["__version__", "TOOL_NAME", "setup_logger"]
