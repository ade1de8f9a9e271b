"""Exact polynomial solutions of second-order linear ODEs with polynomial
coefficients, ``P(r) y'' + Q(r) y' - R(r) y = 0``.
"""

__version__ = "0.1.0"
