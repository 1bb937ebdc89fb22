"""
Fermionic Sums

Exact arithmetic for Hall-Littlewood functions, Kostka-Foulkes polynomials,
one-dimensional sums and their fermionic formulas, mahonian statistics,
subgroup counts in abelian p-groups, and rigged-configuration polynomials.
"""

__version__ = "1.0.0"
__author__ = "Fermionic Sums Team"
