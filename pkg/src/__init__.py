"""Cesaro and Copson operators, K-functionals and real-interpolation norms."""
