"""Toolkit for building, verifying and searching nested stabilizer codes."""

__version__ = "0.1.0"
