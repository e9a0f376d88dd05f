"""Planarity and outerplanarity of generalized ladder graphs.

A generalized (m, n)-ladder is a path u_1..u_m, a path v_1..v_n, and a set of
cross edges (l, r) joining u_l to v_r.  This package decides planarity and
outerplanarity of such instances in O(k log k), extracts forbidden-subdivision
certificates for negative answers, builds verified integer-coordinate drawings
for positive answers, and ships brute-force oracles for cross-checking.
"""

from ._ladderplan import (
    BudgetExceededError,
    CertPath,
    DecisionReport,
    DuplicateEdgeError,
    EdgeClass,
    EdgeNotInInstanceError,
    Embedding,
    Error,
    GeneralizedLadder,
    IncompleteEmbeddingError,
    IndexOutOfRangeError,
    NotApplicableError,
    NotOuterplanarError,
    NotPlanarError,
    OuterplanarCondition,
    ParseError,
    Point,
    PolylineEdge,
    QuadrantFlags,
    Side,
    SubdivisionCertificate,
    SubdivisionPattern,
    Symmetry,
    TooManyEdgesError,
    VertexPlacement,
    VertexRef,
    apply_symmetry,
    certificate_from_json,
    certificate_to_json,
    certificate_to_text,
    classify_edges,
    default_oracle_budget,
    embedding_from_json,
    embedding_to_json,
    embedding_to_svg,
    exact_coordinate_limit,
    extract_k33_witness,
    extract_outerplanar_witness,
    from_functigraph,
    is_outerplanar,
    is_planar,
    make_ladder,
    oracle_is_outerplanar,
    oracle_is_planar,
    outerplanar_embedding,
    outerplanarity_report,
    parse_instance,
    planar_embedding,
    planarity_report,
    quadrant_flags,
    quadrant_flags_naive,
    random_instance,
    serialize_instance,
    verify_certificate,
    verify_embedding,
)

__version__ = "1.0.0"

__all__ = [
    "BudgetExceededError",
    "CertPath",
    "DecisionReport",
    "DuplicateEdgeError",
    "EdgeClass",
    "EdgeNotInInstanceError",
    "Embedding",
    "Error",
    "GeneralizedLadder",
    "IncompleteEmbeddingError",
    "IndexOutOfRangeError",
    "NotApplicableError",
    "NotOuterplanarError",
    "NotPlanarError",
    "OuterplanarCondition",
    "ParseError",
    "Point",
    "PolylineEdge",
    "QuadrantFlags",
    "Side",
    "SubdivisionCertificate",
    "SubdivisionPattern",
    "Symmetry",
    "TooManyEdgesError",
    "VertexPlacement",
    "VertexRef",
    "apply_symmetry",
    "certificate_from_json",
    "certificate_to_json",
    "certificate_to_text",
    "classify_edges",
    "default_oracle_budget",
    "embedding_from_json",
    "embedding_to_json",
    "embedding_to_svg",
    "exact_coordinate_limit",
    "extract_k33_witness",
    "extract_outerplanar_witness",
    "from_functigraph",
    "is_outerplanar",
    "is_planar",
    "make_ladder",
    "oracle_is_outerplanar",
    "oracle_is_planar",
    "outerplanar_embedding",
    "outerplanarity_report",
    "parse_instance",
    "planar_embedding",
    "planarity_report",
    "quadrant_flags",
    "quadrant_flags_naive",
    "random_instance",
    "serialize_instance",
    "verify_certificate",
    "verify_embedding",
]
