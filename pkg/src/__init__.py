"""Unitary Cayley - Source Code Root."""

__version__ = "1.0.0"
