"""Diosi-Penrose collapse model: self-energy, spontaneous emission and a
Bayesian lower bound on the mass-density size R0 from gamma-ray counts."""

__version__ = "0.1.0"
