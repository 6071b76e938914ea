"""Exact relation spaces of motivic double zeta values of odd weight."""

__version__ = "0.1.0"
