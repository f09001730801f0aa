"""Seeded Monte-Carlo estimation of hitting times.

Simulation is the one oracle here that assumes nothing about the linear
algebra: it just walks.  Trial t draws every step from a PRNG stream seeded
by (seed, t) alone, so the outcome of a trial does not depend on how many
trials run, in what order, or on how they are spread across workers;
identical configs give bit-identical statistics.  Step choices use
rejection-based bounded sampling (``random.Random.randrange``), which has no
modulo bias.
"""

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .circulant import CirculantWalk

# Consistency threshold for compare(): ~6e-5 false-failure rate per check.
Z_MAX = 4.0


class TruncatedSimulationError(ValueError):
    """Comparison refused because some trials hit the step cap."""


@dataclass(frozen=True)
class SimConfig:
    walk: CirculantWalk
    target: int
    trials: int
    seed: int
    max_steps_per_trial: int = 10 ** 9

    def __post_init__(self):
        if not 1 <= self.target <= self.walk.modulus - 1:
            raise ValueError(
                f"target must be in 1..{self.walk.modulus - 1}, got {self.target}"
            )
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if self.seed < 0:
            raise ValueError(f"seed must be >= 0, got {self.seed}")
        if self.max_steps_per_trial < 1:
            raise ValueError(f"max_steps_per_trial must be >= 1, got {self.max_steps_per_trial}")


@dataclass(frozen=True)
class SimStats:
    """Sample statistics over the completed (non-truncated) trials.

    mean/variance/stderr are None when every trial truncated.  Variance is
    the unbiased sample variance; stderr = sqrt(variance / completed trials),
    which is sqrt(variance / trials) whenever truncated_trials == 0.
    """

    trials: int
    mean: float
    variance: float
    stderr: float
    truncated_trials: int


def trial_length(config: SimConfig, trial: int, rng: random.Random = None) -> int | None:
    """Walk one trial; return its step count, or None if the cap was hit.

    The returned value is a function of (config, trial) only.  ``rng`` is an
    optional scratch generator so bulk callers can avoid allocating one per
    trial; its prior state is irrelevant because it is re-seeded here.
    """
    if rng is None:
        rng = random.Random()
    # Unique integer per (seed, trial); Mersenne seeding decorrelates streams.
    rng.seed((config.seed << 64) | trial)
    steps = config.walk.steps
    n = config.walk.modulus
    k = len(steps)
    target = config.target
    cap = config.max_steps_per_trial
    randrange = rng.randrange
    pos = 0
    taken = 0
    while taken < cap:
        pos = (pos + steps[randrange(k)]) % n
        taken += 1
        if pos == target:
            return taken
    return None


def simulate(config: SimConfig) -> SimStats:
    """Run all trials of ``config`` and aggregate their step counts.

    Deterministic given the config (seed included) regardless of scheduling:
    the aggregation is a commutative sum over per-trial results that each
    depend only on (seed, trial index).
    """
    rng = random.Random()
    completed = 0
    total = 0
    total_sq = 0
    truncated = 0
    for t in range(config.trials):
        length = trial_length(config, t, rng)
        if length is None:
            truncated += 1
        else:
            completed += 1
            total += length
            total_sq += length * length
    if completed == 0:
        return SimStats(config.trials, None, None, None, truncated)
    mean = total / completed
    if completed == 1:
        variance_exact = Fraction(0)
    else:
        variance_exact = (Fraction(total_sq) - Fraction(total * total, completed)) / (completed - 1)
    variance = float(variance_exact)
    stderr = math.sqrt(variance_exact / completed)
    return SimStats(config.trials, mean, variance, stderr, truncated)


@dataclass(frozen=True)
class Comparison:
    """Outcome of checking a simulation mean against an exact value."""

    z_score: float
    consistent: bool


def compare_stats(stats: SimStats, exact: Fraction) -> Comparison:
    """Judge |mean - exact| against Z_MAX standard errors.

    Refuses (TruncatedSimulationError) if any trial truncated, since the
    sample mean is then conditioned on hitting within the cap.
    """
    if stats.truncated_trials:
        raise TruncatedSimulationError(
            f"{stats.truncated_trials} of {stats.trials} trials hit the step cap"
        )
    deviation = abs(Fraction(stats.mean) - Fraction(exact))
    if stats.stderr == 0.0:
        z = 0.0 if deviation == 0 else math.inf
    else:
        z = float(deviation) / stats.stderr
    return Comparison(z_score=z, consistent=z <= Z_MAX)


def compare(config: SimConfig, exact: Fraction) -> Comparison:
    """Simulate ``config`` and judge the sample mean against ``exact``."""
    return compare_stats(simulate(config), exact)
