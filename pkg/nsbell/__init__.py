"""Simulation library for reference-frame-free Bell tests with noiseless subsystems."""

__version__ = "0.1.0"
