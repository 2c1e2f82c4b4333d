"""Power indices as exact weighting vectors over coalition sizes.

An index assigns each player the weighted sum of their critical numbers,
with one nonnegative rational weight per coalition size, normalised so that
sum(weight[k] * C(n-1, k-1)) == 1.  All arithmetic is exact; ranking
conclusions are order-sensitive, so no tolerance is ever applied.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .combinat import binomial
from .counting import CountVector


@dataclass(frozen=True)
class WeightingVector:
    """Per-size weights (index k-1 holds the weight for coalition size k)."""

    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(Fraction(w) for w in self.weights))
        if not self.weights:
            raise ValueError("a weighting vector needs at least one entry")
        if any(w < 0 for w in self.weights):
            raise ValueError("weights must be nonnegative")
        n = len(self.weights)
        total = sum((w * binomial(n - 1, k) for k, w in enumerate(self.weights)), Fraction(0))
        if total != 1:
            raise ValueError(f"weights do not normalise: sum is {total}, expected 1")

    @property
    def n(self) -> int:
        return len(self.weights)

    def weight(self, size: int) -> Fraction:
        if not 1 <= size <= self.n:
            raise ValueError(f"size must be in [1, {self.n}], got {size}")
        return self.weights[size - 1]


def banzhaf(n: int) -> WeightingVector:
    """Uniform weights 1 / 2^(n-1)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    w = Fraction(1, 2 ** (n - 1))
    return WeightingVector((w,) * n)


def shapley_shubik(n: int) -> WeightingVector:
    """Weights 1 / (n * C(n-1, k-1)); the values of a game sum to 1."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return WeightingVector(tuple(Fraction(1, n * binomial(n - 1, k - 1)) for k in range(1, n + 1)))


def point_mass(n: int, size: int) -> WeightingVector:
    """All weight on one coalition size: weight 1 / C(n-1, size-1) there, 0 elsewhere."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if not 1 <= size <= n:
        raise ValueError(f"size must be in [1, {n}], got {size}")
    weights = [Fraction(0)] * n
    weights[size - 1] = Fraction(1, binomial(n - 1, size - 1))
    return WeightingVector(tuple(weights))


def evaluate(w: WeightingVector, cv: CountVector) -> Fraction:
    """Index value of a player with critical vector ``cv``: sum of weight(k) * cv[k]."""
    lo, hi = cv.k_min, cv.k_max
    if lo is not None and (lo < 1 or hi > w.n):
        raise ValueError(
            f"critical vector support [{lo}, {hi}] exceeds the index's player count {w.n}"
        )
    return sum((w.weight(k) * v for k, v in cv.items()), Fraction(0))


class Dominance(Enum):
    STRICTLY_ABOVE = "strictly-above"
    WEAKLY_ABOVE = "weakly-above"
    EQUAL = "equal"
    WEAKLY_BELOW = "weakly-below"
    STRICTLY_BELOW = "strictly-below"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class Relation:
    """Outcome of the coordinatewise comparison of two critical vectors.

    ``witness`` is set only for INCOMPARABLE: the smallest size where the
    first vector is strictly ahead and the smallest where it is strictly
    behind.
    """

    kind: Dominance
    witness: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        if (self.witness is not None) != (self.kind is Dominance.INCOMPARABLE):
            raise ValueError("witness is present exactly for INCOMPARABLE relations")


def weak_desirability(ci: CountVector, cj: CountVector) -> Relation:
    """Coordinatewise comparison of two critical vectors.

    STRICTLY_ABOVE requires ci[k] > cj[k] at every size where the two are not
    both zero; WEAKLY_ABOVE requires ci[k] >= cj[k] everywhere with a tie at
    some such size.  The BELOW kinds are the mirror images, and INCOMPARABLE
    reports a witness pair of sizes won by opposite sides.
    """
    sizes = sorted(set(ci.support()) | set(cj.support()))
    above = [k for k in sizes if ci[k] > cj[k]]
    below = [k for k in sizes if ci[k] < cj[k]]
    if above and below:
        return Relation(Dominance.INCOMPARABLE, (above[0], below[0]))
    if not above and not below:
        return Relation(Dominance.EQUAL)
    strict = all(ci[k] != cj[k] for k in sizes if ci[k] or cj[k])
    if above:
        return Relation(Dominance.STRICTLY_ABOVE if strict else Dominance.WEAKLY_ABOVE)
    return Relation(Dominance.STRICTLY_BELOW if strict else Dominance.WEAKLY_BELOW)


def distinguishing_indices(
    ci: CountVector, cj: CountVector, n: int
) -> tuple[WeightingVector, WeightingVector] | None:
    """Two point-mass indices ranking the players in opposite orders.

    Defined exactly when the vectors are incomparable; the first index ranks
    the first player strictly higher, the second does the reverse.  Point
    masses are the smallest certificates: each can be audited by looking at a
    single coalition size.
    """
    rel = weak_desirability(ci, cj)
    if rel.kind is not Dominance.INCOMPARABLE:
        return None
    k, m = rel.witness
    return point_mass(n, k), point_mass(n, m)
