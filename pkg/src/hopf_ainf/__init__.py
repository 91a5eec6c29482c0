"""hopf-ainf: exact verification of Hopf A∞-coalgebras and polytope diagonals."""
