"""Computable core of non-commutative surface blowups."""

__version__ = "0.1.0"
