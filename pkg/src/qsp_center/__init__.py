"""Exact computations for quantum symmetric pairs and their centers."""

__version__ = "0.1.0"
