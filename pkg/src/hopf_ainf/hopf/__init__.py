"""The Hopf A∞-coalgebra E ⊗ Γ."""
