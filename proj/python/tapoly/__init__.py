"""Twisted Alexander polynomials of knot groups over SL(2,F_p) and the
partial order on knots defined by knot-group surjections."""

from ._core import (
    Knot,
    __version__,
    degree_one,
    knot,
    knot_from_pd,
    knot_from_presentation,
    knot_names,
    no_surjection,
    poly_canonical,
    poly_divides,
    poly_gcd,
    representations,
    twisted_pairs,
    two_bridge_knot,
    verify_certificate,
    verify_hom,
)

__all__ = [
    "Knot",
    "__version__",
    "degree_one",
    "knot",
    "knot_from_pd",
    "knot_from_presentation",
    "knot_names",
    "no_surjection",
    "poly_canonical",
    "poly_divides",
    "poly_gcd",
    "representations",
    "twisted_pairs",
    "two_bridge_knot",
    "verify_certificate",
    "verify_hom",
]
