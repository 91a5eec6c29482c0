"""Exact arithmetic: Z_p, graded tensor words, the cobar differential."""
