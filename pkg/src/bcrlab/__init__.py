"""bcrlab: diagram algebra, ribbon-presentation invariants, and Monte Carlo
configuration-space integrals for long n-knots."""

__version__ = "0.1.0"
