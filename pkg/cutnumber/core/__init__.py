"""
Core mathematics of the cutnumber package.
"""
