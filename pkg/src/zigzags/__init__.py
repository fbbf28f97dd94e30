"""Zigzag structure of surface triangulations.

Enumerate the zigzags (closed left-right walks) of a simplicial surface,
classify edges, vertices, and faces under a z-orientation, convert
homogeneous orientations to and from directed Eulerian embeddings, glue
z-knotted triangulations along special pairs, and build arbitrarily large
z-knotted spheres from labeled trees of bipyramids.
"""

from .engine import (
    Classification,
    Pass,
    ZOrientation,
    Zigzag,
    all_z_orientations,
    classify,
    enumerate_zigzags,
    face_shadow,
    format_classification,
    format_zigzags,
    is_homogeneous,
    is_z_knotted,
    make_pass,
    make_z_orientation,
    zigzag_predecessor,
    zigzag_successor,
)
from .eulerian import (
    DirectedEmbedding,
    EmbeddingError,
    embedding_from_directed_faces,
    extract_directed_embedding,
    parse_embedding,
    round_trip_check,
    serialize_embedding,
    triangulate_embedding,
    validate_embedding,
)
from .generators import (
    BuildLog,
    GluingRecord,
    TreeError,
    TreeSpec,
    bipyramid,
    bipyramid_canonical_zorientation,
    bipyramid_oracle_zigzags,
    parse_tree,
    platonic,
    serialize_tree,
    tree_build,
    validate_tree,
)
from .surgery import (
    FOUR_ZIGZAG,
    HOST,
    TWO_ZIGZAG,
    GluingSite,
    PiecePair,
    SegmentDecomposition,
    SpecialPair,
    SurgeryError,
    are_concordant,
    check_compatibility,
    find_piece_pairs,
    find_special_pairs,
    glue,
    inherited_pairs,
    predict_glued_zigzag,
    resolve_site,
)
from .triangulation import (
    LinkCycle,
    ParseError,
    Triangulation,
    TriangulationError,
    ValidationReport,
    edge_key,
    face_key,
    parse_triangulation,
    serialize_triangulation,
)

__version__ = "0.1.0"

__all__ = [
    "Classification",
    "Pass",
    "ZOrientation",
    "Zigzag",
    "all_z_orientations",
    "classify",
    "enumerate_zigzags",
    "face_shadow",
    "format_classification",
    "format_zigzags",
    "is_homogeneous",
    "is_z_knotted",
    "make_pass",
    "make_z_orientation",
    "zigzag_predecessor",
    "zigzag_successor",
    "DirectedEmbedding",
    "EmbeddingError",
    "embedding_from_directed_faces",
    "extract_directed_embedding",
    "parse_embedding",
    "round_trip_check",
    "serialize_embedding",
    "triangulate_embedding",
    "validate_embedding",
    "BuildLog",
    "GluingRecord",
    "TreeError",
    "TreeSpec",
    "bipyramid",
    "bipyramid_canonical_zorientation",
    "bipyramid_oracle_zigzags",
    "parse_tree",
    "platonic",
    "serialize_tree",
    "tree_build",
    "validate_tree",
    "FOUR_ZIGZAG",
    "HOST",
    "TWO_ZIGZAG",
    "GluingSite",
    "PiecePair",
    "SegmentDecomposition",
    "SpecialPair",
    "SurgeryError",
    "are_concordant",
    "check_compatibility",
    "find_piece_pairs",
    "find_special_pairs",
    "glue",
    "inherited_pairs",
    "predict_glued_zigzag",
    "resolve_site",
    "LinkCycle",
    "ParseError",
    "Triangulation",
    "TriangulationError",
    "ValidationReport",
    "edge_key",
    "face_key",
    "parse_triangulation",
    "serialize_triangulation",
    "__version__",
]
