"""Independent oracles used to freeze expected values.

Everything here deliberately avoids the library's code paths: binomials come
from the Pascal recurrence, template counts from explicit subset enumeration.
"""

from __future__ import annotations

from legipower import CoalitionTemplate, UsSpec

# Small US-style systems (at most 14 players) covering both executive flags
# and every ordering of signature versus override quotas.
MINI_US_SPECS = [
    UsSpec(4, 5, 3, 3, 4, 4, True, True),
    UsSpec(3, 4, 2, 3, 3, 4, True, True),
    UsSpec(3, 5, 2, 3, 3, 4, True, True),
    UsSpec(4, 4, 3, 3, 4, 4, True, True),
    UsSpec(5, 5, 3, 3, 4, 4, True, True),
    UsSpec(3, 4, 2, 3, 3, 4, True, False),
    UsSpec(3, 4, 2, 3, 3, 4, False, True),
    UsSpec(3, 4, 2, 3, 3, 4, False, False),
    UsSpec(4, 5, 4, 3, 3, 4, True, True),    # signature quota above the override quota
    UsSpec(4, 5, 2, 4, 3, 3, True, True),    # house quotas inverted
    UsSpec(4, 5, 3, 3, 3, 3, True, True),    # override equals signature
    UsSpec(4, 6, 3, 6, 4, 6, True, True),    # unanimity house
    UsSpec(4, 5, 1, 1, 4, 4, True, True),    # tiny quotas
]


def pascal_binomial(n: int, k: int) -> int:
    """C(n, k) via the addition recurrence, never via factorials or math.comb."""
    if k < 0 or k > n:
        return 0
    row = [1]
    for _ in range(n):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row[k]


def enumerate_template_counts(template: CoalitionTemplate) -> dict[int, int]:
    """Per-size counts by checking every subset of a labelled universe."""
    widths = [p.pool_size for p in template.pools]
    total = sum(widths)
    counts: dict[int, int] = {}
    for mask in range(1 << total):
        offset = 0
        ok = True
        for pool, width in zip(template.pools, widths):
            picked = ((mask >> offset) & ((1 << width) - 1)).bit_count()
            if not pool.min_pick <= picked <= pool.max_pick:
                ok = False
                break
            offset += width
        if ok:
            k = template.fixed_count + mask.bit_count()
            counts[k] = counts.get(k, 0) + 1
    return counts
