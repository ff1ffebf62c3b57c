"""Pattern-avoiding (0,1)-matrices: containment, extremal counts, constructions,
zigzag decompositions, pattern-avoiding permanents and exhaustive oracles."""

from .analytics import (
    AvoidingPermanentReport,
    PermutationList,
    avoiding_permanent,
    catalan,
    enumerate_avoiding,
    extend_avoiding,
    is_fully_indecomposable,
    is_grassmannian,
    is_reverse_grassmannian,
    is_sigma_permutation_avoiding,
    is_subsequence,
    is_total_support,
    permanent,
    sequence_contains,
)
from .errors import (
    DomainError,
    MatrixFormatError,
    PatmatError,
    PreconditionError,
    ResourceCapError,
    StructuralError,
)
from .extremal import *  # noqa: F401,F403
from .extremal import __all__ as _extremal_all
from .matrix import (
    BinaryMatrix,
    PermutationPattern,
    Position,
    contains_312,
    contains_pattern,
    contains_pattern_through,
    longest_increasing_chain,
    parse_matrix,
    pattern_to_matrix,
    render_matrix,
)
from .oracle import (
    OracleReport,
    brute_max_ones,
    check_conjecture_k1,
    conjecture_membership,
    enumerate_maximal,
    search_max_avoiding_permanent,
)

__version__ = "0.1.0"
