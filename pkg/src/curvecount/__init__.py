"""Point counts of curves and their moduli over finite fields, and the Siegel modular form traces built from them."""

__version__ = "0.1.0"
