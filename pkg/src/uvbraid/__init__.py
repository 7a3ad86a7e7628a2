"""Exact computations in unrestricted virtual braid groups and their quotients."""

__version__ = "0.1.0"
