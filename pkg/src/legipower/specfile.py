"""Strict parsing of legislature spec files.

A spec file is a JSON document with a ``chambers`` list and an optional
``executive`` block; unknown keys are rejected so that a typo cannot silently
change the model.  Files without an executive load as plain multicameral
legislatures; files with one load as US-style systems, with the first chamber
acting as the vice president's tie-break chamber.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .chambers import ChamberSpec, MulticamSpec, member_critical_vector
from .counting import CountVector
from .semivalues import WeightingVector
from .uslike import PlayerClass, UsSpec, class_critical_vector


class SpecFileError(ValueError):
    """A spec file failed validation; the message names the offending field."""


_CHAMBER_KEYS = {"name", "size", "quota"}
_EXEC_KEYS = {"president", "vice_president", "override"}
_TOP_KEYS = {"chambers", "executive"}

_ALIASES = {
    "p": "president",
    "vp": "vice_president",
    "v": "vice_president",
    "vice-president": "vice_president",
    "sen": "senator",
    "rep": "representative",
}


def _require_int(value: object, where: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise SpecFileError(f"{where}: expected an integer, got {value!r}")
    return value


def _require_bool(value: object, where: str) -> bool:
    if not isinstance(value, bool):
        raise SpecFileError(f"{where}: expected a boolean, got {value!r}")
    return value


@dataclass(frozen=True)
class LoadedSpec:
    """A validated spec file, exposing a uniform class-vector surface."""

    multicam: MulticamSpec | None
    us: UsSpec | None
    chamber_names: tuple[str, ...]
    echo: dict

    @property
    def kind(self) -> str:
        return "us" if self.us is not None else "multicam"

    @property
    def total_players(self) -> int:
        if self.us is not None:
            return self.us.total_players
        return self.multicam.total_players

    def class_ids(self) -> tuple[str, ...]:
        if self.us is None:
            return self.chamber_names
        return tuple(cls.value for cls in self.us.classes())

    def resolve_class(self, name: str) -> str:
        """Map a user-supplied class name to a canonical class id."""
        ids = self.class_ids()
        by_lower = {i.lower(): i for i in ids}
        key = _ALIASES.get(name.lower(), name.lower())
        if key in by_lower:
            return by_lower[key]
        if self.us is not None:
            by_chamber = {
                self.chamber_names[0].lower(): PlayerClass.SENATOR.value,
                self.chamber_names[1].lower(): PlayerClass.REPRESENTATIVE.value,
            }
            if key in by_chamber:
                return by_chamber[key]
        raise SpecFileError(f"unknown player class {name!r}; known: {', '.join(ids)}")

    def vector(self, class_id: str) -> CountVector:
        if self.us is not None:
            return class_critical_vector(self.us, PlayerClass(class_id))
        return member_critical_vector(self.multicam, class_id)

    def game(self):
        from . import oracle

        return oracle.from_spec(self.us if self.us is not None else self.multicam)


def parse_spec(document: dict) -> LoadedSpec:
    """Validate a parsed JSON document into a LoadedSpec."""
    if not isinstance(document, dict):
        raise SpecFileError("top level: expected an object")
    unknown = set(document) - _TOP_KEYS
    if unknown:
        raise SpecFileError(f"top level: unknown keys {sorted(unknown)}")
    raw_chambers = document.get("chambers")
    if not isinstance(raw_chambers, list) or not raw_chambers:
        raise SpecFileError("chambers: expected a nonempty list")

    chambers: list[ChamberSpec] = []
    for i, entry in enumerate(raw_chambers):
        where = f"chambers[{i}]"
        if not isinstance(entry, dict):
            raise SpecFileError(f"{where}: expected an object")
        unknown = set(entry) - _CHAMBER_KEYS
        if unknown:
            raise SpecFileError(f"{where}: unknown keys {sorted(unknown)}")
        missing = _CHAMBER_KEYS - set(entry)
        if missing:
            raise SpecFileError(f"{where}: missing keys {sorted(missing)}")
        name = entry["name"]
        if not isinstance(name, str) or not name:
            raise SpecFileError(f"{where}.name: expected a nonempty string")
        size = _require_int(entry["size"], f"{where}.size")
        quota = _require_int(entry["quota"], f"{where}.quota")
        try:
            chambers.append(ChamberSpec(name, size, quota))
        except ValueError as exc:
            raise SpecFileError(f"{where}: {exc}") from exc

    if "executive" not in document:
        try:
            multicam = MulticamSpec(tuple(chambers))
        except ValueError as exc:
            raise SpecFileError(f"chambers: {exc}") from exc
        return LoadedSpec(multicam, None, tuple(c.name for c in chambers), document)

    executive = document["executive"]
    if not isinstance(executive, dict):
        raise SpecFileError("executive: expected an object")
    unknown = set(executive) - _EXEC_KEYS
    if unknown:
        raise SpecFileError(f"executive: unknown keys {sorted(unknown)}")
    missing = _EXEC_KEYS - set(executive)
    if missing:
        raise SpecFileError(f"executive: missing keys {sorted(missing)}")
    if len(chambers) != 2:
        raise SpecFileError(
            f"executive: requires exactly two chambers, got {len(chambers)}"
        )
    has_president = _require_bool(executive["president"], "executive.president")
    has_vp = _require_bool(executive["vice_president"], "executive.vice_president")
    override = executive["override"]
    if not isinstance(override, dict):
        raise SpecFileError("executive.override: expected an object")
    names = [c.name for c in chambers]
    unknown = set(override) - set(names)
    if unknown:
        raise SpecFileError(f"executive.override: unknown chambers {sorted(unknown)}")
    missing = set(names) - set(override)
    if missing:
        raise SpecFileError(f"executive.override: missing chambers {sorted(missing)}")
    overrides = {
        name: _require_int(override[name], f"executive.override.{name}") for name in names
    }
    senate, house = chambers
    try:
        us = UsSpec(
            senate_size=senate.size,
            house_size=house.size,
            senate_quota=senate.quota,
            house_quota=house.quota,
            senate_override=overrides[senate.name],
            house_override=overrides[house.name],
            has_president=has_president,
            has_vp=has_vp,
        )
    except ValueError as exc:
        raise SpecFileError(f"executive: {exc}") from exc
    return LoadedSpec(None, us, (senate.name, house.name), document)


def load_spec_file(path: str | Path) -> LoadedSpec:
    """Read, parse, and validate a spec file."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SpecFileError(f"{path}: {exc}") from exc
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFileError(f"{path}: invalid JSON: {exc}") from exc
    return parse_spec(document)


def load_weight_file(path: str | Path, n: int) -> WeightingVector:
    """Read a weighting vector: one exact rational per line, length n.

    The normalisation identity is checked exactly; no tolerance is applied.
    """
    try:
        lines = [ln.strip() for ln in Path(path).read_text().splitlines()]
    except OSError as exc:
        raise SpecFileError(f"{path}: {exc}") from exc
    entries = [ln for ln in lines if ln]
    if len(entries) != n:
        raise SpecFileError(f"{path}: expected {n} weights, got {len(entries)}")
    weights = []
    for i, entry in enumerate(entries):
        try:
            weights.append(Fraction(entry))
        except (ValueError, ZeroDivisionError) as exc:
            raise SpecFileError(f"{path}: line {i + 1}: not an exact rational: {entry!r}") from exc
    try:
        return WeightingVector(tuple(weights))
    except ValueError as exc:
        raise SpecFileError(f"{path}: {exc}") from exc
