"""Cells, tableaux and associated varieties for highest weight modules of sl(n)."""

__version__ = "0.1.0"
