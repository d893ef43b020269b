"""Locally Cohen-Macaulay curves on a double plane in projective 3-space.

Two independent layers: closed-form combinatorics (triples, dimensions,
cohomology, postulation characters, liaison, classification bounds) and an
exact-arithmetic graded-ideal oracle with an explicit curve catalog.  The
acceptance module checks the layers against each other.
"""

from .bounds import (
    CurveKind,
    bounds_for,
    classify,
    classify_quadric_divisor,
    extremal_bound,
    genus_ceilings,
    subextremal_bound,
)
from .catalog import (
    ExtractionError,
    SpecializationError,
    binary_resultant,
    catalog_entry,
    conic_fiber,
    extract_report,
    extract_triple,
    extraction_window,
    extremal_like_ideal,
    family_fiber,
    limit_ideal,
    limit_presentation_ideal,
    verify_specialization,
)
from .characters import (
    CurveModel,
    InvalidModel,
    InvalidProfile,
    ZProfile,
    collinear_model,
    collinear_profile,
    curve_character,
    curve_character_from_h0,
    curve_character_tail,
    empty_profile,
    enumerate_profiles,
    generic_model,
    generic_profile,
    z_from_character_tail,
)
from .cohomology import euler_char, h0, h1, h2, h3, is_acm, rao_function
from .hilbert_scheme import (
    ComponentGraph,
    component_graph,
    components,
    count_components,
    graph_dot,
    graph_json,
    is_connected,
    nonempty,
    planar_genus,
    specialization_target,
)
from .intfn import IntFn, difference, h0_plane, h0_space
from .liaison import LiaisonInvariants, bilink, is_minimal, liaison_invariants, link
from .polyoracle import (
    GradedIdeal,
    HilbertFitError,
    ParseError,
    Poly,
    SaturationGuardError,
    colon_piece,
    format_ideal,
    format_poly,
    graded_piece_dim,
    hf_quotient,
    hilbert_data,
    hp_fit,
    member,
    parse_ideal,
    parse_poly,
    saturation_member,
    saturation_piece,
    saturation_piece_dim,
    variables,
)
from .triples import (
    CurveClass,
    InvalidTriple,
    Triple,
    component_dim,
    curve_class,
    flag_dim,
    section_space_dim,
    triple_from_class,
)

__version__ = "0.1.0"

__all__ = [
    "ComponentGraph",
    "CurveClass",
    "CurveKind",
    "CurveModel",
    "ExtractionError",
    "GradedIdeal",
    "HilbertFitError",
    "IntFn",
    "InvalidModel",
    "InvalidProfile",
    "InvalidTriple",
    "LiaisonInvariants",
    "ParseError",
    "Poly",
    "SaturationGuardError",
    "SpecializationError",
    "Triple",
    "ZProfile",
    "bilink",
    "binary_resultant",
    "bounds_for",
    "catalog_entry",
    "classify",
    "classify_quadric_divisor",
    "collinear_model",
    "collinear_profile",
    "colon_piece",
    "component_dim",
    "component_graph",
    "components",
    "conic_fiber",
    "count_components",
    "curve_character",
    "curve_character_from_h0",
    "curve_character_tail",
    "curve_class",
    "difference",
    "empty_profile",
    "enumerate_profiles",
    "euler_char",
    "extract_report",
    "extract_triple",
    "extraction_window",
    "extremal_bound",
    "extremal_like_ideal",
    "family_fiber",
    "flag_dim",
    "format_ideal",
    "format_poly",
    "generic_model",
    "generic_profile",
    "genus_ceilings",
    "graded_piece_dim",
    "graph_dot",
    "graph_json",
    "h0",
    "h0_plane",
    "h0_space",
    "h1",
    "h2",
    "h3",
    "hf_quotient",
    "hilbert_data",
    "hp_fit",
    "is_acm",
    "is_connected",
    "is_minimal",
    "liaison_invariants",
    "limit_ideal",
    "limit_presentation_ideal",
    "link",
    "member",
    "nonempty",
    "parse_ideal",
    "parse_poly",
    "planar_genus",
    "rao_function",
    "saturation_member",
    "saturation_piece",
    "saturation_piece_dim",
    "section_space_dim",
    "specialization_target",
    "subextremal_bound",
    "triple_from_class",
    "variables",
    "z_from_character_tail",
]
