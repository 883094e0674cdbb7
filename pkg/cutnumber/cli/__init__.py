"""
Command line front end for the cutnumber package.
"""

from cutnumber.cli.main import build_parser, main

__all__ = ["build_parser", "main"]
