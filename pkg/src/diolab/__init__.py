"""Exact-arithmetic laboratory for double equations, Frey curves and descent."""

__version__ = "0.1.0"
