"""Exact projections of polyhedra by Fourier-Motzkin elimination with test-cone redundancy removal."""

__version__ = "0.1.0"
