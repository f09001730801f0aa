"""Random walks on circulant digraphs and their first-step linear systems.

The model is a walker on Z_N that moves from v to v + s, with s drawn
uniformly from a fixed multiset of step residues.  (Texts that define
Cayley-graph arcs by left multiplication orient the arrows the other way;
everything here follows the operative walker-moves-by-adding-a-step
convention, which is what the first-step equations describe.)

Conditioning the expected hitting time h(0, l) of vertex l on the first step
gives, for every l != 0,

    |S| * h(0, l) - sum over s in S of h(0, (l - s) mod N) = |S|,

with h(0, 0) = 0.  ``build_system`` assembles this (N-1) x (N-1) system and
``hitting_oracle`` solves it exactly; this solver is the ground truth every
closed form in ``hitting`` is checked against.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact_linalg import RationalMatrix, solve
from .hitting import HittingResult, Method


class UnreachableTargetError(ValueError):
    """The walk can never reach the requested target, so no hitting time exists."""


@dataclass(frozen=True)
class CirculantWalk:
    """Walk on Z_N with a uniform step multiset.

    Steps are normalized mod N at construction (so -1 becomes N-1) and kept
    as a sorted tuple with duplicates preserved: each occurrence is taken
    with probability 1/len(steps).  Steps congruent to 0 are rejected.
    """

    modulus: int
    steps: tuple

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        if not self.steps:
            raise ValueError("at least one step is required")
        normalized = tuple(sorted(s % self.modulus for s in self.steps))
        if normalized[0] == 0:
            raise ValueError("steps congruent to 0 mod N (self-loops) are not allowed")
        object.__setattr__(self, "steps", normalized)

    @property
    def degree(self) -> int:
        return len(self.steps)

    def reaches_everything(self) -> bool:
        """True iff the walk can get from any vertex to any other."""
        return math.gcd(self.modulus, *self.steps) == 1


@dataclass(frozen=True)
class ReducedSystem:
    """First-step system for target 0: matrix @ h = rhs with h = (h(0,1), ..., h(0,N-1))."""

    matrix: RationalMatrix
    rhs: list


def build_system(walk: CirculantWalk) -> ReducedSystem:
    """Assemble the first-step system of ``walk`` for absorbing target 0.

    Row l carries the walk degree on the diagonal and -1 in column
    (l - s) mod N for each step occurrence s, except that contributions to
    column 0 are dropped (the target vertex is absorbing, h(0,0) = 0).
    """
    n = walk.modulus
    degree = walk.degree
    grid = [[0] * (n - 1) for _ in range(n - 1)]
    for l in range(1, n):
        row = grid[l - 1]
        row[l - 1] = degree
        for s in walk.steps:
            m = (l - s) % n
            if m != 0:
                row[m - 1] -= 1
    return ReducedSystem(RationalMatrix(grid), [Fraction(degree)] * (n - 1))


def hitting_oracle(walk: CirculantWalk) -> HittingResult:
    """Exact hitting times h(0, l) for l = 1..N-1 by solving the first-step system.

    Raises UnreachableTargetError when the steps and modulus share a factor,
    in which case some vertices never reach 0 and the system is singular.
    """
    if not walk.reaches_everything():
        g = math.gcd(walk.modulus, *walk.steps)
        raise UnreachableTargetError(
            f"target unreachable: steps {walk.steps} and modulus {walk.modulus} "
            f"share the factor {g}"
        )
    system = build_system(walk)
    values = solve(system.matrix, system.rhs)
    return HittingResult(walk.modulus, walk.steps, values, Method.ORACLE)


def full_chain_times(walk: CirculantWalk, target: int) -> dict:
    """Hitting times h(v, target) for every start v, with no translation shortcut.

    Solves the N-1 first-step equations over all non-target vertices directly,
    so the result is independent of the symmetry that ``build_system`` bakes in.
    """
    n = walk.modulus
    target %= n
    if not walk.reaches_everything():
        raise UnreachableTargetError(
            f"target unreachable: steps {walk.steps} and modulus {walk.modulus} "
            f"share the factor {math.gcd(walk.modulus, *walk.steps)}"
        )
    vertices = [v for v in range(n) if v != target]
    index = {v: i for i, v in enumerate(vertices)}
    grid = [[0] * (n - 1) for _ in vertices]
    for v in vertices:
        row = grid[index[v]]
        row[index[v]] = walk.degree
        for s in walk.steps:
            w = (v + s) % n
            if w != target:
                row[index[w]] -= 1
    values = solve(RationalMatrix(grid), [Fraction(walk.degree)] * (n - 1))
    return {v: values[index[v]] for v in vertices}


def translation_check(walk: CirculantWalk, k: int) -> bool:
    """Verify translation invariance h(k, k + l) = h(0, l) for every l.

    Equivalently (substituting start and target), checks that the full-chain
    solution with absorbing vertex k satisfies h((k - l) mod N, k) = h(0, l)
    for l = 1..N-1.  Returns True when all N-1 equalities hold exactly.
    """
    n = walk.modulus
    k %= n
    shifted = full_chain_times(walk, k)
    origin = hitting_oracle(walk)
    return all(shifted[(k - l) % n] == origin.value(l) for l in range(1, n))
