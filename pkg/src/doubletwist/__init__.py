"""Rational-concordance obstructions for double twist knots.

Intersection forms of definite fillings of cyclic branched covers,
lattice-embedding search with explicit witnesses, and the algebraic
side of the story (Alexander polynomials, Fox-Milnor factorizations,
Levine-Tristram signatures, branched-cover homology orders).
"""

__version__ = "0.1.0"

from . import embed, forms, knotalg, pipeline  # noqa: F401
