"""Exact clique-minor, chromatic-number and separator tools for small graphs."""

__version__ = "0.1.0"
