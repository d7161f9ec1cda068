"""Brauer graph algebras: presentations, derived invariants, covers and trivial extensions."""
from .algebra import (
    Chain,
    PathNF,
    QuiverPresentation,
    build_quiver,
    check_grading_admissible,
    dimension,
    hom_dimension,
    multiply,
    normal_form,
    path_basis,
)
from .covers import CoverData, Cut, all_cuts, build_cover, orbit_hom_check, verify_cover
from .invariants import (
    DerivedInvariants,
    OrbitClass,
    derived_equivalent,
    derived_invariants,
    orbit_class,
    orbit_equivalent,
    poincare_hopf_check,
)
from .ribbon import (
    BrauerError,
    BrauerGraph,
    FaceReport,
    RibbonGraph,
    ValidationError,
    are_isomorphic,
    faces,
    genus,
    genus_from_counts,
    relabel,
    sigma_bipartite,
    validate,
)
from .trivial_ext import (
    DeltaData,
    GentlePresentation,
    TrivExtTable,
    build_trivial_extension,
    complement,
    delta_C,
    gentle_from_cut,
    solve_delta_p,
    verify_phi,
)


__all__ = [
    "Chain",
    "PathNF",
    "QuiverPresentation",
    "build_quiver",
    "check_grading_admissible",
    "dimension",
    "hom_dimension",
    "multiply",
    "normal_form",
    "path_basis",
    "CoverData",
    "Cut",
    "all_cuts",
    "build_cover",
    "orbit_hom_check",
    "verify_cover",
    "DerivedInvariants",
    "OrbitClass",
    "derived_equivalent",
    "derived_invariants",
    "orbit_class",
    "orbit_equivalent",
    "poincare_hopf_check",
    "BrauerError",
    "BrauerGraph",
    "FaceReport",
    "RibbonGraph",
    "ValidationError",
    "are_isomorphic",
    "faces",
    "genus",
    "genus_from_counts",
    "relabel",
    "sigma_bipartite",
    "validate",
    "DeltaData",
    "GentlePresentation",
    "TrivExtTable",
    "build_trivial_extension",
    "complement",
    "delta_C",
    "gentle_from_cut",
    "solve_delta_p",
    "verify_phi",
]
