"""Plethysm, weight-level ampleness certificates and tautological-ring checks
for automorphic bundles on Siegel modular varieties in characteristic p."""

__version__ = "0.1.0"
