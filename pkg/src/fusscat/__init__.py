"""Exact Coxeter-Catalan combinatorics: noncrossing and nonnesting partitions,
k-divisible posets, Shi chambers, cluster complexes and their enumerations."""

__version__ = "0.1.0"
