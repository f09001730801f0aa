"""Jacobsthal and Fibonacci numbers, plus executable forms of their identities.

Every identity used by the closed-form hitting-time evaluators is available
here as a checkable statement: ``check_identity`` evaluates both sides with
exact arithmetic and reports them, so a failing identity yields a concrete
counterexample instead of a bare boolean.  One of the catalogued identities
(``Identity.ALTERNATING_SUM``) is known to be false as stated; the validated
replacement is ``alternating_sum_closed_form``.
"""

import enum
from dataclasses import dataclass
from fractions import Fraction


class SequenceKind(enum.Enum):
    JACOBSTHAL = "jacobsthal"
    FIBONACCI = "fibonacci"


# values[n+2] = values[n+1] + coeff * values[n], starting from 0, 1
_RECURRENCE_COEFF = {SequenceKind.JACOBSTHAL: 2, SequenceKind.FIBONACCI: 1}


class SequenceTable:
    """Append-only memo table for one of the two sequences.

    Entries never change once computed, so the table is safe for concurrent
    reads after a sequential ``warm_up`` to the highest index needed.
    """

    def __init__(self, kind: SequenceKind):
        self.kind = kind
        self._coeff = _RECURRENCE_COEFF[kind]
        self._values = [0, 1]

    def __len__(self) -> int:
        return len(self._values)

    def value(self, n: int) -> int:
        if n < 0:
            raise ValueError(f"sequence index must be >= 0, got {n}")
        values = self._values
        coeff = self._coeff
        while len(values) <= n:
            values.append(values[-1] + coeff * values[-2])
        return values[n]

    def warm_up(self, n: int) -> None:
        """Materialize entries 0..n."""
        self.value(n)


_JACOBSTHAL = SequenceTable(SequenceKind.JACOBSTHAL)
_FIBONACCI = SequenceTable(SequenceKind.FIBONACCI)


def jacobsthal(n: int) -> int:
    """n-th Jacobsthal number: 0, 1, 1, 3, 5, 11, ... (J[n+2] = J[n+1] + 2*J[n])."""
    return _JACOBSTHAL.value(n)


def fibonacci(n: int) -> int:
    """n-th Fibonacci number: 0, 1, 1, 2, 3, 5, ..."""
    return _FIBONACCI.value(n)


def alternating_sum_oracle(n: int) -> int:
    """Sum of (-1)^(n+j) * J[j] for j = 1..n, evaluated term by term.

    This is the independent reference for the alternating-sum closed forms;
    it makes no algebraic assumptions beyond the recurrence itself.
    """
    if n < 1:
        raise ValueError(f"alternating sum needs n >= 1, got {n}")
    sign = -1 if n % 2 == 0 else 1
    total = 0
    for j in range(1, n + 1):
        total += sign * jacobsthal(j)
        sign = -sign
    return total


def alternating_sum_closed_form(n: int) -> Fraction:
    """Closed form (2*J[n] - n*(-1)^n) / 3 for the alternating sum.

    This is the replacement for the false catalogued identity
    ``Identity.ALTERNATING_SUM``; it is validated against
    ``alternating_sum_oracle`` in the test suite before anything relies on it.
    """
    if n < 1:
        raise ValueError(f"alternating sum needs n >= 1, got {n}")
    return Fraction(2 * jacobsthal(n) - n * (-1) ** n, 3)


class Identity(enum.Enum):
    """Catalogue of Jacobsthal identities in their stated (verbatim) form."""

    CLOSED_FORM = "closed-form"            # J[n] = (2^n - (-1)^n) / 3
    SUM_ADJACENT = "sum-adjacent"          # J[n+1] + J[n] = 2^n
    DOUBLE_STEP = "double-step"            # J[n+1] - 2*J[n] = (-1)^n
    ADDITION_LAW = "addition-law"          # J[m](J[n+1]+2J[n-1]) + J[n](J[m+1]+2J[m-1]) = 2*J[m+n]
    CONVOLUTION = "convolution"            # J[n-1] = J[j]*J[n-j] + 2*J[j-1]*J[n-j-1]
    WEIGHTED_POW_SUM = "weighted-pow-sum"  # sum 2^j*J[n-j], j=1..n = (2/3)(n*J[n-1] + (n-1)*J[n])
    ALTERNATING_SUM = "alternating-sum"    # sum (-1)^(n+j)*J[j], j=1..n = (1/3)(n*J[n-1] - (n-2)*J[n]); false as stated


@dataclass(frozen=True)
class IdentityCheck:
    """Both sides of one identity instance; ``holds`` iff they are equal."""

    identity: Identity
    args: tuple
    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def __str__(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in zip(("n", "m", "j"), self.args) if v is not None)
        verdict = "holds" if self.holds else f"fails: lhs={self.lhs}, rhs={self.rhs}"
        return f"{self.identity.value}({args}) {verdict}"


def check_identity(identity: Identity, n: int, m: int = None, j: int = None) -> IdentityCheck:
    """Evaluate both sides of ``identity`` exactly at the given indices.

    The statement is evaluated verbatim; nothing is asserted about its truth.
    Index ranges: CLOSED_FORM needs n >= 0; CONVOLUTION needs n >= 2 and
    1 <= j <= n-1; ADDITION_LAW needs m >= 1; everything else needs n >= 1.
    Raises ValueError for out-of-range or extraneous indices.
    """
    J = jacobsthal
    if identity is Identity.CLOSED_FORM:
        _require(n >= 0, identity, f"n must be >= 0, got {n}")
        _no_extra_args(identity, m, j)
        lhs = Fraction(J(n))
        rhs = Fraction(2 ** n - (-1) ** n, 3)
    elif identity is Identity.SUM_ADJACENT:
        _require(n >= 1, identity, f"n must be >= 1, got {n}")
        _no_extra_args(identity, m, j)
        lhs = Fraction(J(n + 1) + J(n))
        rhs = Fraction(2 ** n)
    elif identity is Identity.DOUBLE_STEP:
        _require(n >= 1, identity, f"n must be >= 1, got {n}")
        _no_extra_args(identity, m, j)
        lhs = Fraction(J(n + 1) - 2 * J(n))
        rhs = Fraction((-1) ** n)
    elif identity is Identity.ADDITION_LAW:
        _require(n >= 1, identity, f"n must be >= 1, got {n}")
        _require(m is not None and m >= 1, identity, f"m must be >= 1, got {m}")
        _require(j is None, identity, "takes indices (n, m) only")
        lhs = Fraction(J(m) * (J(n + 1) + 2 * J(n - 1)) + J(n) * (J(m + 1) + 2 * J(m - 1)))
        rhs = Fraction(2 * J(m + n))
    elif identity is Identity.CONVOLUTION:
        _require(n >= 2, identity, f"n must be >= 2, got {n}")
        _require(j is not None and 1 <= j <= n - 1, identity, f"j must be in 1..{n - 1}, got {j}")
        _require(m is None, identity, "takes indices (n, j) only")
        lhs = Fraction(J(n - 1))
        rhs = Fraction(J(j) * J(n - j) + 2 * J(j - 1) * J(n - j - 1))
    elif identity is Identity.WEIGHTED_POW_SUM:
        _require(n >= 1, identity, f"n must be >= 1, got {n}")
        _no_extra_args(identity, m, j)
        lhs = Fraction(sum(2 ** i * J(n - i) for i in range(1, n + 1)))
        rhs = Fraction(2, 3) * (n * J(n - 1) + (n - 1) * J(n))
    elif identity is Identity.ALTERNATING_SUM:
        _require(n >= 1, identity, f"n must be >= 1, got {n}")
        _no_extra_args(identity, m, j)
        lhs = Fraction(alternating_sum_oracle(n))
        rhs = Fraction(n * J(n - 1) - (n - 2) * J(n), 3)
    else:
        raise ValueError(f"unknown identity: {identity!r}")
    return IdentityCheck(identity, (n, m, j), lhs, rhs)


def _require(cond: bool, identity: Identity, msg: str):
    if not cond:
        raise ValueError(f"{identity.value}: {msg}")


def _no_extra_args(identity: Identity, m, j):
    _require(m is None and j is None, identity, "takes a single index n")
