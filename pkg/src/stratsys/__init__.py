"""Exact-arithmetic toolkit for quiver representations and stratifying systems."""

__version__ = "0.1.0"
