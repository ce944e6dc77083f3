"""
bperm: signed permutations, pattern avoidance, and exhaustive verification.

The central objects are signed permutations (windows of n signed integers
whose absolute values permute {1, ..., n}) together with two containment
orders: classical containment of signed patterns at positive positions, and
global containment of unsigned patterns anywhere in the 2n-letter mirror
word.  On top of these sit characterized families (vexillary, boolean, free,
smooth, Grassmannian), tableau-based counting, closed-form enumeration, and
a registry of desk-scale checks replaying the identities relating them.
"""
from .classes import (
    Method,
    Not132AvoidingError,
    NotColayeredError,
    UnsupportedMethodError,
    colayered_from_composition,
    composition_of,
    is_bigrassmannian,
    is_bigrassmannian_conjectured,
    is_boolean,
    is_colayered,
    is_free,
    is_grassmannian,
    is_grassmannian_conjectured,
    is_smooth_B,
    is_smooth_BC,
    is_smooth_C,
    is_vexillary,
    signed_composition,
)
from .core import (
    DihedralSymmetry,
    InvalidOneLineError,
    InvalidWindowError,
    Permutation,
    SignedPermutation,
    signed_group_order,
    signed_permutations,
)
from .enumeration import (
    SequenceTable,
    SizeCapExceededError,
    count_gav_132_and_decreasing,
    count_gav_132_and_increasing,
    es_bound,
    es_extremal_count,
    fib_like,
    palindromic_composition_count,
    palindromic_compositions,
    sequence,
    unsigned_avoider_count,
)
from .harness import (
    Check,
    CheckReport,
    CheckRow,
    CHECKS,
    UnknownCheckError,
    run_all,
    run_check,
)
from .patterns import (
    PatternTooLargeError,
    classical_avoiders,
    classical_contains,
    count_global_occurrences,
    gav,
    gav_count,
    global_basis,
    global_contains,
    rc_reduce,
    symmetry_class_counts,
    unsigned_contains,
)
from .tableaux import (
    DominoTableau,
    catalan_multidim,
    domino_count,
    domino_tableaux,
    is_domino_tileable,
    lds,
    lis,
    partitions,
    rs_shape,
    shape_of_signed,
    standard_tableaux,
    syt_count,
    two_core,
)

__version__ = "0.1.0"
