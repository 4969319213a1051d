"""Exact-arithmetic toolkit for Veronese-avoiding projective hypersurfaces.

Everything is computed over the rationals with no floating point anywhere:
sparse polynomial arithmetic, fraction-free linear algebra, Buchberger's
algorithm, Milnor-algebra Hilbert data, Macaulay inverse systems, singular
point classification, and the top-level avoidance verdict with its
machine-readable certificate.
"""

from veroav.polynomial import Polynomial
from veroav.parsing import parse_poly, render_poly

__all__ = ["Polynomial", "parse_poly", "render_poly"]
