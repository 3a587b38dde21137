"""Exact second Lagrange spectrum toolkit."""

__version__ = "1.0.0"
__author__ = "lag2 Team"
