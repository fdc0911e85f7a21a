"""Exact escalation and universality tools for Hermitian lattices over imaginary quadratic fields."""

__version__ = "0.1.0"
