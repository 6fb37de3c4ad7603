"""Exact coincidence indices for lattices and Z-modules in dimensions 2 to 4."""

__version__ = "0.1.0"
