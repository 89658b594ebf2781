"""Double Grothendieck polynomials of classical types, computed exactly."""

__version__ = "0.1.0"
