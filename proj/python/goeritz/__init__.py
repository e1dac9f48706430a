"""Exact Kauffman bracket, Jones polynomial and Goeritz matrix computations."""

from ._core import (
    GoeritzError,
    bracket,
    determinant_set,
    genus,
    goeritz_from_graph,
    goeritz_from_pd,
    jones,
    medial,
    mu,
    nu,
    realize,
    tau,
)

__all__ = [
    "GoeritzError",
    "bracket",
    "determinant_set",
    "genus",
    "goeritz_from_graph",
    "goeritz_from_pd",
    "jones",
    "medial",
    "mu",
    "nu",
    "realize",
    "tau",
]
