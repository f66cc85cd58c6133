"""Exact duality computations for finite abelian groups, their towers and
Hopf algebras over towers of finite groups."""

__version__ = "0.1.0"
