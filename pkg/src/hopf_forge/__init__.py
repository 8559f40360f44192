"""Exact computations in a pointed Hopf algebra of type A2 x A2 with one
linking relation, its small quotient at a root of unity, and the
associated double crossproduct."""

__version__ = "0.1.0"
