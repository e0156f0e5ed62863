"""Subspaces as canonical RREF bases: equality is comparison, intersection is a kernel."""

from fractions import Fraction

from commvar.exactla import RationalMatrix, kernel, rank, span

m = RationalMatrix([[1, 2, 3], [2, 4, 6], [1, 0, Fraction(1, 2)]])
print("rank:", rank(m))
print("kernel basis:", kernel(m).vectors())

# Two different spanning sets, one subspace.
u = span([[1, 1, 0], [0, 1, 1]], 3)
v = span([[1, 2, 1], [1, 0, -1]], 3)
print("same plane:", u == v)

plane = span([[1, 0, 0], [0, 1, 0]], 3)
print("u meets the xy-plane in:", (u & plane).vectors())
print("annihilator of u:", u.annihilator().vectors())
