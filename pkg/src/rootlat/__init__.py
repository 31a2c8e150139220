"""Exact arithmetic for negative-definite ADE root lattices."""

from .certifier import (
    Certificate,
    CandidateVector,
    CertificationReport,
    certify,
    certify_all,
    enumerate_candidates,
)
from .lattice import (
    CompositeLattice,
    DiscriminantGroup,
    IrreducibleRootLattice,
    build_composite,
    build_irreducible,
    coset_of,
    discriminant_group,
    dual_basis_vector,
    inner_product,
    parse_lattice_spec,
    square,
)
from .reduction import ReductionTrace, reduce_component, verify_trace
from .small_vectors import SmallVectorReport, enumerate_dual_up_to, in_scope_orbits, kth_smallest
from .weyl import OrbitSummary, all_roots, canonical_rep, orbit, reflect, simple_vertices

__all__ = [
    "CandidateVector", "Certificate", "CertificationReport", "CompositeLattice",
    "DiscriminantGroup", "IrreducibleRootLattice", "OrbitSummary", "ReductionTrace",
    "SmallVectorReport", "all_roots", "build_composite", "build_irreducible",
    "canonical_rep", "certify", "certify_all", "coset_of", "discriminant_group",
    "dual_basis_vector", "enumerate_candidates", "enumerate_dual_up_to", "in_scope_orbits",
    "inner_product", "kth_smallest", "orbit", "parse_lattice_spec", "reduce_component",
    "reflect", "simple_vertices", "square", "verify_trace",
]


def clear_caches() -> None:
    """Drop every memoised lattice, enumeration, orbit and reduction result."""
    from . import certifier, lattice, reduction, small_vectors, weyl

    for fn in (
        lattice.build_irreducible, lattice.discriminant_group, lattice._coset_irreducible,
        weyl.all_roots, weyl.highest_root, weyl.simple_vertices,
        small_vectors._enumerate_cached, small_vectors.in_scope_orbits,
        reduction._orbit_size, reduction._reduce,
        certifier._options, certifier._square, certifier._verified,
    ):
        fn.cache_clear()
