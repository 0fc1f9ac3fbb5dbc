"""Graceful-style labelings of signed graphs: construct, verify, search."""

from .constructions import (
    FAMILIES,
    FIXTURE_IDS,
    ConstructedGraph,
    build_bistar,
    build_k4_pendants,
    build_p3_pendants,
    build_st,
    build_star_one_neg,
    build_ste,
    fixture,
)
from .core import (
    GraphStats,
    InvalidParameter,
    LengthMismatch,
    ModeMismatch,
    Sign,
    SignedGraph,
    TooLarge,
    UnknownFixture,
    VertexLabeling,
    from_json,
    structural_stats,
    to_dot,
    to_json,
    to_obj,
)
from .ndsg import build_gmn, is_complement_reducible, is_p4_free
from .search import (
    ALL_PRUNES,
    SearchConfig,
    SearchGoal,
    SearchOutcome,
    SearchStatus,
    SurveyRecord,
    oracle_solve,
    read_catalog,
    solve,
    survey_gmn,
    survey_one,
)
from .verify import (
    LabelingMode,
    VerificationReport,
    check_additive_bound,
    edge_classes,
    label_bound,
    verify,
)

__version__ = "0.1.0"
