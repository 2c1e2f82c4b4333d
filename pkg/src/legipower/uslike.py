"""US-style legislative systems: two chambers, a president, a tie-breaking VP.

A bill passes either on the signature track (president present, house quota
met, and the senate quota met outright or via the vice president breaking an
exact tie) or on the override track (both override quotas met, president not
needed).  Critical coalition families for each player class are derived as
rectangles in the (senate count, house count) grid, one set per membership
pattern of the president and vice president, and counted exactly through
coalition templates.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Iterable

from .counting import CoalitionTemplate, CountVector, PoolConstraint, sum_counts, template_counts
from .semivalues import Relation, WeightingVector, evaluate, weak_desirability


class PlayerClass(Enum):
    PRESIDENT = "president"
    VICE_PRESIDENT = "vice_president"
    SENATOR = "senator"
    REPRESENTATIVE = "representative"


@dataclass(frozen=True)
class UsSpec:
    """Sizes, signature-track quotas, override quotas, and executive flags.

    The override quotas may sit on either side of the signature quotas; both
    tracks are always evaluated.  Defaults model the familiar 537-player
    system: 100 senators (quotas 51/67), 435 representatives (quotas 218/290),
    a president, and a tie-breaking vice president.
    """

    senate_size: int = 100
    house_size: int = 435
    senate_quota: int = 51
    house_quota: int = 218
    senate_override: int = 67
    house_override: int = 290
    has_president: bool = True
    has_vp: bool = True

    def __post_init__(self) -> None:
        if self.senate_size < 1 or self.house_size < 1:
            raise ValueError("chamber sizes must be >= 1")
        for label, quota, size in (
            ("senate_quota", self.senate_quota, self.senate_size),
            ("house_quota", self.house_quota, self.house_size),
            ("senate_override", self.senate_override, self.senate_size),
            ("house_override", self.house_override, self.house_size),
        ):
            if not 1 <= quota <= size:
                raise ValueError(f"{label} must be in [1, {size}], got {quota}")

    @property
    def total_players(self) -> int:
        return self.senate_size + self.house_size + self.has_president + self.has_vp

    @property
    def tie_break_active(self) -> bool:
        """Whether the VP's senate vote can ever matter: the quota shortfall of
        one must be an exact tie of the chamber."""
        return (
            self.has_vp
            and self.has_president
            and self.senate_quota - 1 == self.senate_size // 2
        )

    def classes(self) -> tuple[PlayerClass, ...]:
        out = []
        if self.has_president:
            out.append(PlayerClass.PRESIDENT)
        if self.has_vp:
            out.append(PlayerClass.VICE_PRESIDENT)
        out.append(PlayerClass.SENATOR)
        out.append(PlayerClass.REPRESENTATIVE)
        return tuple(out)


# A rectangle of (senate count, house count) cells, all bounds inclusive.
@dataclass(frozen=True)
class _Rect:
    s_lo: int
    s_hi: int
    r_lo: int
    r_hi: int


def _intersect(a: _Rect, b: _Rect) -> _Rect | None:
    s_lo, s_hi = max(a.s_lo, b.s_lo), min(a.s_hi, b.s_hi)
    r_lo, r_hi = max(a.r_lo, b.r_lo), min(a.r_hi, b.r_hi)
    if s_lo > s_hi or r_lo > r_hi:
        return None
    return _Rect(s_lo, s_hi, r_lo, r_hi)


def _subtract(a: _Rect, b: _Rect) -> list[_Rect]:
    mid = _intersect(a, b)
    if mid is None:
        return [a]
    out = []
    if a.s_lo <= mid.s_lo - 1:
        out.append(_Rect(a.s_lo, mid.s_lo - 1, a.r_lo, a.r_hi))
    if mid.s_hi + 1 <= a.s_hi:
        out.append(_Rect(mid.s_hi + 1, a.s_hi, a.r_lo, a.r_hi))
    if a.r_lo <= mid.r_lo - 1:
        out.append(_Rect(mid.s_lo, mid.s_hi, a.r_lo, mid.r_lo - 1))
    if mid.r_hi + 1 <= a.r_hi:
        out.append(_Rect(mid.s_lo, mid.s_hi, mid.r_hi + 1, a.r_hi))
    return out


def _region_subtract(region: list[_Rect], rects: list[_Rect]) -> list[_Rect]:
    for b in rects:
        region = [piece for a in region for piece in _subtract(a, b)]
    return region


def _region_union(a: list[_Rect], b: list[_Rect]) -> list[_Rect]:
    return a + _region_subtract(b, a)


def _win_region(spec: UsSpec, p_in: bool, v_in: bool) -> list[_Rect]:
    """Winning (senate count, house count) cells for a P/V membership pattern."""
    region: list[_Rect] = []
    if spec.has_president and p_in:
        floor_s = spec.senate_quota
        if v_in and spec.tie_break_active:
            floor_s = spec.senate_quota - 1
        if floor_s <= spec.senate_size and spec.house_quota <= spec.house_size:
            region = [_Rect(floor_s, spec.senate_size, spec.house_quota, spec.house_size)]
    override = _Rect(spec.senate_override, spec.senate_size,
                     spec.house_override, spec.house_size)
    return _region_union(region, [override])


def _shift_senate(region: list[_Rect], m_s: int) -> list[_Rect]:
    # Cells whose senate neighbour one below is winning.
    return [
        _Rect(r.s_lo + 1, min(r.s_hi + 1, m_s), r.r_lo, r.r_hi)
        for r in region
        if r.s_lo + 1 <= m_s
    ]


def _shift_house(region: list[_Rect], m_r: int) -> list[_Rect]:
    return [
        _Rect(r.s_lo, r.s_hi, r.r_lo + 1, min(r.r_hi + 1, m_r))
        for r in region
        if r.r_lo + 1 <= m_r
    ]


def _patterns(spec: UsSpec) -> list[tuple[bool, bool]]:
    p_opts = (False, True) if spec.has_president else (False,)
    v_opts = (False, True) if spec.has_vp else (False,)
    return [(p, v) for p in p_opts for v in v_opts]


def _require_class(spec: UsSpec, cls: PlayerClass) -> None:
    if cls is PlayerClass.PRESIDENT and not spec.has_president:
        raise ValueError("spec has no president")
    if cls is PlayerClass.VICE_PRESIDENT and not spec.has_vp:
        raise ValueError("spec has no vice president")


def critical_templates(spec: UsSpec, cls: PlayerClass) -> tuple[CoalitionTemplate, ...]:
    """Disjoint coalition-template rows whose union is the class's critical family.

    Each template fixes one membership pattern of the president and vice
    president plus a rectangle of (senate count, house count) cells in which
    the focal player is critical; the focal chamber member is counted inside
    its own chamber's cell coordinate.
    """
    _require_class(spec, cls)
    m_s, m_r = spec.senate_size, spec.house_size
    rows: list[CoalitionTemplate] = []
    for p_in, v_in in _patterns(spec):
        win = _win_region(spec, p_in, v_in)
        if cls is PlayerClass.PRESIDENT:
            if not p_in:
                continue
            crit = _region_subtract(win, _win_region(spec, False, v_in))
            fixed = 1 + v_in
            for r in crit:
                rows.append(CoalitionTemplate(fixed, (
                    PoolConstraint(m_s, r.s_lo, r.s_hi),
                    PoolConstraint(m_r, r.r_lo, r.r_hi),
                )))
        elif cls is PlayerClass.VICE_PRESIDENT:
            if not v_in:
                continue
            crit = _region_subtract(win, _win_region(spec, p_in, False))
            fixed = 1 + p_in
            for r in crit:
                rows.append(CoalitionTemplate(fixed, (
                    PoolConstraint(m_s, r.s_lo, r.s_hi),
                    PoolConstraint(m_r, r.r_lo, r.r_hi),
                )))
        elif cls is PlayerClass.SENATOR:
            crit = _region_subtract(win, _shift_senate(win, m_s))
            fixed = p_in + v_in
            for r in crit:
                clipped = _intersect(r, _Rect(1, m_s, 0, m_r))
                if clipped is None:
                    continue
                rows.append(CoalitionTemplate(fixed + 1, (
                    PoolConstraint(m_s - 1, clipped.s_lo - 1, clipped.s_hi - 1),
                    PoolConstraint(m_r, clipped.r_lo, clipped.r_hi),
                )))
        else:
            crit = _region_subtract(win, _shift_house(win, m_r))
            fixed = p_in + v_in
            for r in crit:
                clipped = _intersect(r, _Rect(0, m_s, 1, m_r))
                if clipped is None:
                    continue
                rows.append(CoalitionTemplate(fixed + 1, (
                    PoolConstraint(m_s, clipped.s_lo, clipped.s_hi),
                    PoolConstraint(m_r - 1, clipped.r_lo - 1, clipped.r_hi - 1),
                )))
    return tuple(rows)


def class_critical_vector(spec: UsSpec, cls: PlayerClass) -> CountVector:
    """Exact critical numbers of one player of the given class, for every size."""
    return sum_counts(template_counts(t) for t in critical_templates(spec, cls))


def class_power(spec: UsSpec, cls: PlayerClass, w: WeightingVector) -> Fraction:
    """Index value of one player of the class under the given weighting vector."""
    if w.n != spec.total_players:
        raise ValueError(
            f"weighting vector sized for {w.n} players, spec has {spec.total_players}"
        )
    return evaluate(w, class_critical_vector(spec, cls))


def ranking(spec: UsSpec, w: WeightingVector) -> tuple[tuple[PlayerClass, Fraction], ...]:
    """Classes with their index values, sorted from most to least powerful.

    Sorting is by exact value; classes with equal values appear adjacent, in
    declaration order, and report layers render them as ties.
    """
    values = [(cls, class_power(spec, cls, w)) for cls in spec.classes()]
    order = {cls: i for i, cls in enumerate(PlayerClass)}
    return tuple(sorted(values, key=lambda cv: (-cv[1], order[cv[0]])))


def vp_rep_sign_table(spec: UsSpec) -> dict[int, int]:
    """Sign of (VP critical number minus representative critical number) per size.

    Covers every size where either vector is nonzero; +1 means the vice
    president is ahead, -1 the representative, 0 an exact tie.
    """
    _require_class(spec, PlayerClass.VICE_PRESIDENT)
    cv = class_critical_vector(spec, PlayerClass.VICE_PRESIDENT)
    cr = class_critical_vector(spec, PlayerClass.REPRESENTATIVE)
    sizes = sorted(set(cv.support()) | set(cr.support()))
    return {k: (cv[k] > cr[k]) - (cv[k] < cr[k]) for k in sizes}


def supermajority_scan(
    spec: UsSpec, senate_quotas: Iterable[int]
) -> list[tuple[int, Relation, Relation]]:
    """Weak-desirability verdicts as the senate signature quota varies.

    For each quota value, returns (quota, senator-versus-representative
    relation, president-versus-senator relation), computed from exact critical
    vectors with everything else unchanged.
    """
    out = []
    for quota in senate_quotas:
        scanned = replace(spec, senate_quota=quota)
        cs = class_critical_vector(scanned, PlayerClass.SENATOR)
        cr = class_critical_vector(scanned, PlayerClass.REPRESENTATIVE)
        sr = weak_desirability(cs, cr)
        if scanned.has_president:
            cp = class_critical_vector(scanned, PlayerClass.PRESIDENT)
            ps = weak_desirability(cp, cs)
        else:
            ps = weak_desirability(CountVector(), cs)
        out.append((quota, sr, ps))
    return out
