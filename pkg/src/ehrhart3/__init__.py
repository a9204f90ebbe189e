"""Exact Ehrhart polynomials of 3-dimensional simple lattice polytopes."""

from .dedekind import EdgeArith, dedekind_direct, dedekind_fast, edge_dedekind, sawtooth
from .ehrhart import (
    EhrhartPolynomial,
    WalkCoefficients,
    breakdown,
    c1,
    closed_form_prism_c1,
    closed_form_tetra_c1,
    edge_term,
    ehrhart_polynomial,
    facet_correction,
    tridiag_det,
    walk_coefficients,
)
from .oracle import VerificationReport, count, interpolate, unimodular_fuzz, verify
from .polytope import Edge, Facet, FacetWalk, Polytope, build, facet_walk

__all__ = [
    "EdgeArith", "dedekind_direct", "dedekind_fast", "edge_dedekind", "sawtooth",
    "EhrhartPolynomial", "WalkCoefficients", "breakdown", "c1", "closed_form_prism_c1",
    "closed_form_tetra_c1", "edge_term", "ehrhart_polynomial", "facet_correction",
    "tridiag_det", "walk_coefficients",
    "VerificationReport", "count", "interpolate", "unimodular_fuzz", "verify",
    "Edge", "Facet", "FacetWalk", "Polytope", "build", "facet_walk",
]
