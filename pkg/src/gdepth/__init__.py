"""Exact-arithmetic engine for Hilbert-Samuel functions, Hilbert
coefficients, minimal reductions, superficial elements, and certified
depth verdicts for associated graded rings."""

__version__ = "0.1.0"
