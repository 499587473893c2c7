"""Exact character theory of finite groups and numerics for Dedekind zeta zeros."""

__version__ = "0.1.0"
