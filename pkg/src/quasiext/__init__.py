"""Finite bounded lattices, retraction pairs, and the extension of
quasi-overlap / quasi-grouping operators from a small lattice to a big one."""

from .errors import (
    DomainMismatch,
    DuplicateElement,
    DuplicateEntry,
    LatticeError,
    LatticeSyntaxError,
    NotALattice,
    NotAPartialOrder,
    NotARetraction,
    NotBounded,
    NotMonotone,
    NotTotal,
    SizeLimitExceeded,
    TheoremViolation,
    UnknownElement,
    UnknownReference,
)
from .extension import (
    ExtensionResult,
    extend_grouping,
    extend_overlap,
    verify_extension_identity,
    verify_theorem,
)
from .io import (
    Workspace,
    parse_lattice,
    parse_map,
    parse_operator,
    serialize_lattice,
    serialize_map,
    serialize_operator,
)
from .lattice import (
    FiniteBoundedLattice,
    ValidationReport,
    Violation,
    build_lattice,
    fixture_corpus,
    join,
    leq,
    make_boolean,
    make_chain,
    make_diamond_M3,
    make_pentagon_N5,
    make_product,
    meet,
)
from .maps import (
    MonotoneMap,
    RetractionPair,
    check_boundary_conditions,
    check_homomorphism,
    check_monotone,
    check_retraction_pair,
    compose,
    constant_map,
    enumerate_retraction_pairs,
    identity_map,
    make_retraction_pair,
)
from .operators import (
    GROUPING,
    OVERLAP,
    AxiomReport,
    OperatorTable,
    Witness,
    canonical_join,
    canonical_meet,
    check_quasi_grouping,
    check_quasi_overlap,
    enumerate_quasi_groupings,
    enumerate_quasi_overlaps,
)

__version__ = "0.1.0"
