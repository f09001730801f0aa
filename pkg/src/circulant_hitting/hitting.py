"""Closed-form hitting times for circulant walks, in exact arithmetic.

For the forward walk with steps {+1,+2} on Z_N the first-step system has an
explicit inverse whose entries are ratios of Jacobsthal numbers
(``inverse_entry``); hitting times are twice its row sums.  Collapsing the
row sums gives an O(N) closed form per target (``hitting_corrected``).  An
uncorrected variant of that collapse (``hitting_printed``) is kept verbatim
because it is reproducibly wrong: it agrees with the exact values only at
l = N-1.  The undirected walk with steps {±1,±2} has its own closed form in
Fibonacci numbers (``hitting_fibonacci``).

Every evaluator here is a hypothesis about the first-step-analysis solver in
``circulant``, which the suite treats as ground truth; closed forms are only
trusted once they match it exactly across the verified range (all N up to
128, every target), a gate that ``hitting_corrected`` and
``hitting_fibonacci`` pass and ``hitting_printed`` deliberately fails.
"""

import enum
from dataclasses import dataclass
from fractions import Fraction

from .exact_linalg import RationalMatrix
from .sequences import fibonacci, jacobsthal

# The Jacobsthal closed forms below apply to exactly this step multiset.
FORWARD_ONE_TWO_STEPS = (1, 2)


def undirected_one_two_steps(n: int) -> tuple:
    """Step multiset {+1, +2, -1, -2} reduced mod n (needs n >= 5 to stay simple)."""
    return tuple(sorted((1 % n, 2 % n, (n - 1) % n, (n - 2) % n)))


class Method(enum.Enum):
    """How a hitting-time value was produced."""

    ORACLE = "oracle"
    ROW_SUM = "rowsum"
    PRINTED = "printed"
    CORRECTED = "corrected"
    FIBONACCI = "fibonacci"
    MONTE_CARLO = "montecarlo"


@dataclass(frozen=True)
class HittingResult:
    """Exact hitting times h(0, l) for l = 1..N-1, tagged with their method."""

    modulus: int
    steps: tuple
    values: list
    method: Method

    def __post_init__(self):
        if len(self.values) != self.modulus - 1:
            raise ValueError(f"expected {self.modulus - 1} values, got {len(self.values)}")

    def value(self, l: int) -> Fraction:
        if not 1 <= l <= self.modulus - 1:
            raise ValueError(f"target must be in 1..{self.modulus - 1}, got {l}")
        return self.values[l - 1]


def _check_modulus(n: int, minimum: int = 3):
    if n < minimum:
        raise ValueError(f"modulus must be >= {minimum}, got {n}")


def _check_target(n: int, l: int):
    if not 1 <= l <= n - 1:
        raise ValueError(f"target must be in 1..{n - 1}, got {l}")


def inverse_entry(n: int, i: int, j: int) -> Fraction:
    """Entry (i, j) of the inverse of the {+1,+2} first-step matrix, 1-based.

    Four cases, dispatched with the corner (i, j) = (N-1, 1) first::

        (N-1, 1)  ->  J[N-1] / J[N]
        j = i+1   ->  J[i] * J[N-i-1] / J[N]
        j < i+1   ->  (J[i-j+1]*(J[N-i+j-2] + J[N-i+j-1])
                       - (-1)^(i+j) * J[j-1] * J[N-i-1]) / J[N]
        j > i+1   ->  J[i] * J[N-j] * (J[j-i-1] + J[j-i]) / J[N]

    The corner is also reproduced by the j < i+1 branch (J[0] = 0 kills the
    extra terms), which the test suite asserts, so the dispatch order is
    observably immaterial.
    """
    _check_modulus(n)
    if not (1 <= i <= n - 1 and 1 <= j <= n - 1):
        raise ValueError(f"indices must be in 1..{n - 1}, got ({i}, {j})")
    J = jacobsthal
    if (i, j) == (n - 1, 1):
        num = J(n - 1)
    elif j == i + 1:
        num = J(i) * J(n - i - 1)
    elif j < i + 1:
        num = J(i - j + 1) * (J(n - i + j - 2) + J(n - i + j - 1)) \
            - (-1) ** (i + j) * J(j - 1) * J(n - i - 1)
    else:
        num = J(i) * J(n - j) * (J(j - i - 1) + J(j - i))
    return Fraction(num, J(n))


def inverse_matrix(n: int) -> RationalMatrix:
    """Full (N-1)x(N-1) closed-form inverse; data[i-1][j-1] = inverse_entry(n, i, j)."""
    _check_modulus(n)
    jacobsthal(n)  # warm the shared table once, not per entry
    return RationalMatrix(
        [[inverse_entry(n, i, j) for j in range(1, n)] for i in range(1, n)]
    )


def hitting_rowsum(n: int) -> HittingResult:
    """Hitting times for steps {+1,+2} as 2x the row sums of the inverse."""
    _check_modulus(n)
    inv = inverse_matrix(n)
    values = [2 * sum(row, Fraction(0)) for row in inv.data]
    return HittingResult(n, FORWARD_ONE_TWO_STEPS, values, Method.ROW_SUM)


def hitting_corrected(n: int, l: int) -> Fraction:
    """h(0, l) for steps {+1,+2} in O(l + N) integer operations.

    Evaluates (2 / (3*J[N])) * (2*l*J[l-1]*J[N-l]
    + J[l] * ((N+2*l)*J[N-l-1] + (N+l)*J[N-l])).  This is the row-sum
    collapse redone with the validated alternating-sum closed form; it is
    exposed as a trusted method because it matched the exact oracle at every
    (N, l) with N up to 128 (re-asserted by the acceptance suite).
    """
    _check_modulus(n)
    _check_target(n, l)
    J = jacobsthal
    num = 2 * l * J(l - 1) * J(n - l) + J(l) * ((n + 2 * l) * J(n - l - 1) + (n + l) * J(n - l))
    return Fraction(2 * num, 3 * J(n))


def hitting_printed(n: int, l: int) -> Fraction:
    """Uncorrected closed-form variant for steps {+1,+2}, evaluated verbatim.

    Computes (1 / (3*J[N])) * (2*J[l-1]*(3*l*J[N-l-1] + 2*l*J[N-l])
    + J[l] * ((N+l+3)*J[N-l-1] + (N+3*l+1)*J[N-l])).  Makes no claim of
    agreement with the oracle: it matches only at l = N-1 and is retained so
    the discrepancy stays reproducible (e.g. N=5, l=1 gives 24/11 where the
    true value is 34/11).
    """
    _check_modulus(n)
    _check_target(n, l)
    J = jacobsthal
    num = 2 * J(l - 1) * (3 * l * J(n - l - 1) + 2 * l * J(n - l)) \
        + J(l) * ((n + l + 3) * J(n - l - 1) + (n + 3 * l + 1) * J(n - l))
    return Fraction(num, 3 * J(n))


def hitting_last(n: int) -> Fraction:
    """h(0, N-1) for steps {+1,+2} via its dedicated short form.

    Evaluates (2 / (3*J[N])) * (N*J[N-1] + (N-1)*J[N]); must agree with
    hitting_rowsum at index N-1 (the one point where hitting_printed is
    also correct).
    """
    _check_modulus(n)
    J = jacobsthal
    return Fraction(2 * (n * J(n - 1) + (n - 1) * J(n)), 3 * J(n))


def hitting_fibonacci(n: int, l: int) -> Fraction:
    """h(0, l) for the undirected walk with steps {±1,±2} (needs N >= 5).

    Evaluates (2/5) * (l*(N-l) + 2*N*F[l]*F[N-l]/F[N]).
    """
    _check_modulus(n, minimum=5)
    _check_target(n, l)
    F = fibonacci
    return Fraction(2, 5) * (l * (n - l) + Fraction(2 * n * F(l) * F(n - l), F(n)))


def hitting_corrected_vector(n: int) -> HittingResult:
    """All targets of hitting_corrected as one result."""
    _check_modulus(n)
    jacobsthal(n)
    values = [hitting_corrected(n, l) for l in range(1, n)]
    return HittingResult(n, FORWARD_ONE_TWO_STEPS, values, Method.CORRECTED)


def hitting_printed_vector(n: int) -> HittingResult:
    """All targets of hitting_printed as one result."""
    _check_modulus(n)
    jacobsthal(n)
    values = [hitting_printed(n, l) for l in range(1, n)]
    return HittingResult(n, FORWARD_ONE_TWO_STEPS, values, Method.PRINTED)


def hitting_fibonacci_vector(n: int) -> HittingResult:
    """All targets of hitting_fibonacci as one result."""
    _check_modulus(n, minimum=5)
    fibonacci(n)
    values = [hitting_fibonacci(n, l) for l in range(1, n)]
    return HittingResult(n, undirected_one_two_steps(n), values, Method.FIBONACCI)
