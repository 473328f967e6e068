"""Exact computation of longest-element signatures on zero weight spaces."""

__version__ = "0.1.0"
