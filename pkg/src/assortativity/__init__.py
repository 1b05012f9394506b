"""Exact assortativeness indices for 2x2 matching matrices and executable axiom checks."""

from .errors import (
    AllZero,
    AssortativityError,
    ConstraintViolation,
    InvalidWitness,
    MissingThreshold,
    NegativeEntry,
    NegativeIndexValue,
    NonPositiveScalar,
    OutOfDomain,
    ParseError,
    PerturbationOutOfRange,
    UnknownAxiom,
    UnknownIndex,
)
from .indices import (
    ALR,
    ALR_MOD,
    TRACE,
    TRACE_MOD,
    IndexDefinition,
    LinearFamilyParams,
    custom_index,
    get_index,
    linear_family,
    tilde_transform,
)
from .matrix import BASIS, MatchingMatrix, new_matrix, population, random_rate
from .search import SampleConfig, axiom_suite

__version__ = "0.1.0"
