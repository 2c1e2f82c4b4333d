"""Counting families of coalitions built from fixed members plus pool picks.

A coalition family is described by a template: some members present in every
coalition, plus independent picks from pairwise-disjoint pools, each pick
constrained to a range.  Per-size counts are exact integers obtained by
convolving the pools' binomial rows.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass

from .combinat import binomial


class CountVector:
    """Exact per-coalition-size counts, stored sparsely with interval bounds."""

    __slots__ = ("_counts",)

    def __init__(self, counts: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = counts.items() if isinstance(counts, Mapping) else counts
        store: dict[int, int] = {}
        for k, v in items:
            if k < 0:
                raise ValueError(f"coalition size must be >= 0, got {k}")
            if v < 0:
                raise ValueError(f"count at size {k} must be >= 0, got {v}")
            if v:
                store[k] = store.get(k, 0) + v
        self._counts = store

    def __getitem__(self, k: int) -> int:
        return self._counts.get(k, 0)

    def __bool__(self) -> bool:
        return bool(self._counts)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CountVector):
            return self._counts == other._counts
        if isinstance(other, Mapping):
            return self._counts == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._counts.items()))

    def __iter__(self) -> Iterator[int]:
        return iter(self.support())

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}: {v}" for k, v in self.items())
        return f"CountVector({{{inner}}})"

    def items(self) -> list[tuple[int, int]]:
        return sorted(self._counts.items())

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._counts))

    @property
    def k_min(self) -> int | None:
        return min(self._counts) if self._counts else None

    @property
    def k_max(self) -> int | None:
        return max(self._counts) if self._counts else None

    def total(self) -> int:
        return sum(self._counts.values())

    def to_dict(self) -> dict[int, int]:
        return dict(self._counts)


@dataclass(frozen=True)
class PoolConstraint:
    """Pick between min_pick and max_pick members from a pool of pool_size."""

    pool_size: int
    min_pick: int
    max_pick: int

    def __post_init__(self) -> None:
        if not 0 <= self.min_pick <= self.max_pick <= self.pool_size:
            raise ValueError(
                f"need 0 <= min_pick <= max_pick <= pool_size, got "
                f"({self.pool_size}, {self.min_pick}, {self.max_pick})"
            )


@dataclass(frozen=True)
class CoalitionTemplate:
    """Fixed members plus constrained picks from disjoint pools."""

    fixed_count: int
    pools: tuple[PoolConstraint, ...] = ()

    def __post_init__(self) -> None:
        if self.fixed_count < 0:
            raise ValueError(f"fixed_count must be >= 0, got {self.fixed_count}")
        object.__setattr__(self, "pools", tuple(self.pools))


def _convolve(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for i, x in a.items():
        for j, y in b.items():
            key = i + j
            out[key] = out.get(key, 0) + x * y
    return out


def template_counts(template: CoalitionTemplate) -> CountVector:
    """Per-size counts of the template's coalition family.

    The count at size k is the number of ways to pick a_p members from each
    pool p within its range with fixed_count + sum(a_p) == k: the convolution
    of the pools' binomial rows, shifted by the fixed members.
    """
    acc = {template.fixed_count: 1}
    for pool in template.pools:
        row = {
            a: binomial(pool.pool_size, a)
            for a in range(pool.min_pick, pool.max_pick + 1)
        }
        acc = _convolve(acc, row)
    return CountVector(acc)


def joint_quota_vector(chambers: Iterable[tuple[int, int]]) -> CountVector:
    """Counts of ways to take a quota-meeting subset from every chamber at once.

    ``chambers`` is a sequence of (size, quota) pairs; the count at k is the
    number of k-member unions with at least the quota taken from each chamber.
    The empty chamber list yields the empty pick: count 1 at size 0.
    """
    pools = []
    for size, quota in chambers:
        if not 0 < quota <= size:
            raise ValueError(f"need 0 < quota <= size, got size={size}, quota={quota}")
        pools.append(PoolConstraint(size, quota, size))
    return template_counts(CoalitionTemplate(0, tuple(pools)))


def joint_quota_count(chambers: Iterable[tuple[int, int]], k: int) -> int:
    """Entry of ``joint_quota_vector`` at size k (0 when unreachable)."""
    return joint_quota_vector(chambers)[k]


def sum_counts(vectors: Iterable[CountVector]) -> CountVector:
    """Pointwise sum; callers guarantee the summed families are disjoint."""
    acc: dict[int, int] = {}
    for vec in vectors:
        for k, v in vec.items():
            acc[k] = acc.get(k, 0) + v
    return CountVector(acc)
