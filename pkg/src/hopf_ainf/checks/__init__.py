"""Verification engines: structure relations, derivations, binomial identity sweeps."""
