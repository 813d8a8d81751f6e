"""disputekit: model legal disputes as argumentation frameworks, decide
acceptance under the standard semantics, and explain the verdicts."""

from .core import (
    AcceptanceMode,
    Argument,
    ArgumentationFramework,
    Extension,
    Label,
    Labelling,
    Semantics,
    acceptance_status,
    characteristic_function,
    enumerate_extensions,
    grounded_extension,
    grounded_labelling,
    is_admissible,
    is_conflict_free,
    labelling_from_extension,
    new_framework,
)
from .oracle import brute_force_oracle, brute_force_sweep
from .variants import (
    AttackKind,
    AudienceOrder,
    BipolarFramework,
    DerivedAttack,
    ValuedFramework,
    baf_to_aaf,
    derived_attacks,
    vaf_defeats,
    vaf_to_aaf,
)
from .adf import (
    Condition,
    DialecticalFramework,
    TriValue,
    aaf_as_adf,
    adf_grounded,
    adf_two_valued_models,
    evaluate_condition,
    parse_condition,
    serialize_condition,
)
from .structured import (
    CaseFile,
    FlattenResult,
    ToulminArgument,
    Violation,
    ViolationKind,
    case_from_framework,
    flatten_toulmin,
    validate_toulmin,
)
from .explain import (
    DisputeTree,
    Standing,
    StatusReport,
    WhatIfDelta,
    apply_edits,
    compute_standings,
    dispute_tree,
    invert_edits,
    status_report,
    what_if,
)
from .formats import (
    Document,
    DocumentKind,
    ProblemTask,
    TaskKind,
    format_extension,
    parse_apx,
    parse_document,
    parse_tgf,
    run_task,
    serialize_apx,
    serialize_document,
    serialize_tgf,
)

__version__ = "0.1.0"
