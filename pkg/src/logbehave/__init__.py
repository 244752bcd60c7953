"""Exact evaluation and log-behavior verification for recursive combinatorial sequences."""

__version__ = "0.1.0"
