"""Permutahedron and associahedron combinatorics with Z_2 coefficients."""
