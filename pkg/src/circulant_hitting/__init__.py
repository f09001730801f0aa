"""Exact average hitting times of simple random walks on circulant digraphs.

The walk model lives in ``circulant`` (with the exact first-step-analysis
solver that serves as ground truth), the Jacobsthal/Fibonacci closed forms in
``hitting``, the integer sequences and their identity checks in ``sequences``,
exact rational linear algebra in ``exact_linalg``, and a seeded Monte-Carlo
oracle in ``montecarlo``.  ``cli`` exposes everything on the command line.
"""

from .circulant import (
    CirculantWalk,
    ReducedSystem,
    UnreachableTargetError,
    build_system,
    full_chain_times,
    hitting_oracle,
    translation_check,
)
from .exact_linalg import (
    RationalMatrix,
    SingularMatrixError,
    is_identity,
    mat_vec,
    multiply,
    solve,
)
from .hitting import (
    FORWARD_ONE_TWO_STEPS,
    HittingResult,
    Method,
    hitting_corrected,
    hitting_corrected_vector,
    hitting_fibonacci,
    hitting_fibonacci_vector,
    hitting_last,
    hitting_printed,
    hitting_printed_vector,
    hitting_rowsum,
    inverse_entry,
    inverse_matrix,
    undirected_one_two_steps,
)
from .montecarlo import (
    Comparison,
    SimConfig,
    SimStats,
    TruncatedSimulationError,
    Z_MAX,
    compare,
    compare_stats,
    simulate,
    trial_length,
)
from .sequences import (
    Identity,
    IdentityCheck,
    SequenceKind,
    SequenceTable,
    alternating_sum_closed_form,
    alternating_sum_oracle,
    check_identity,
    fibonacci,
    jacobsthal,
)

__version__ = "0.1.0"
