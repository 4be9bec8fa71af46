"""Labelling-based abstract argumentation with justification statuses and
statement-level indecision labels."""
from ._accel import USING_NUMBA
from .enumeration import (
    ORACLE_BOUND,
    SemanticsKind,
    brute_force_labellings,
    enumerate_labellings,
    grounded_labelling,
    justification_map,
    justification_status,
)
from .errors import (
    ArgumentationError,
    ConflictingContrary,
    DuplicateArgument,
    DuplicateConclusion,
    OffVocabulary,
    OracleBoundExceeded,
    ParseError,
    PartialLabelling,
    UndeclaredArgument,
    UnknownArgument,
    UnrealizableStatus,
)
from .framework import ArgumentationFramework, attackers_of, load_af, parse_af
from .semantics import IN, OUT, UNDEC, Label, Labelling, is_admissible, is_complete, is_legal
from .statements import (
    ClaimMap,
    Scheme,
    StatementLabel,
    label_all_statements,
    label_statement,
    parse_claims,
    pro_con,
    sceptically_accepted,
)
from .taxonomy import AcceptanceClass, IndecisionForm, classify_status, engagement_rank

__version__ = "0.1.0"
