"""Normalized-time codes and interval-relation semantics over endpoints.

A temporal expression maps to a 10-digit YYYYMMDDHH code; fields that are
not written are zero-padded, and the mask records which fields are real.
Weekdays have no slot in the code and ride alongside as 1..7 (Monday=1).
"""

from __future__ import annotations

import re
from dataclasses import dataclass


class BadTemporalLiteral(ValueError):
    def __init__(self, surface: str, reason: str = ""):
        msg = f"cannot normalize temporal expression {surface!r}"
        if reason:
            msg += f": {reason}"
        super().__init__(msg)
        self.surface = surface


FIELD_ORDER = ("year", "month", "day", "hour")

# granularity tags for the gran(x) code guard; contiguous field runs only
GRAN_TAGS: dict[tuple[str, ...], int] = {
    ("year",): 1,
    ("month",): 2,
    ("day",): 3,
    ("hour",): 4,
    ("year", "month"): 5,
    ("month", "day"): 6,
    ("day", "hour"): 7,
    ("year", "month", "day"): 8,
    ("month", "day", "hour"): 9,
    ("year", "month", "day", "hour"): 10,
}

# tags whose mask includes month+day (lie within one month) / year (one year)
MONTH_FINE_TAGS = (6, 8, 9, 10)
YEAR_FINE_TAGS = (5, 8, 10)

_WEEKDAYS = "月火水木金土日"
_FW = str.maketrans("０１２３４５６７８９", "0123456789")
_UNIT_RE = re.compile(r"(午前|午後)?([0-9]+)(時|年|月|日)|([月火水木金土日])曜日")


@dataclass(frozen=True)
class NormalizedTime:
    code: int
    mask: tuple[str, ...]          # subset of FIELD_ORDER, in order
    weekday: int | None = None     # 1..7, Monday=1

    @property
    def code_str(self) -> str:
        return f"{self.code:010d}"

    @property
    def gran_tag(self) -> int | None:
        if self.weekday is not None:
            return None
        return GRAN_TAGS[self.mask]

    def field(self, name: str) -> int:
        shift = {"year": 10 ** 6, "month": 10 ** 4, "day": 10 ** 2, "hour": 1}[name]
        size = 10 ** 4 if name == "year" else 10 ** 2
        return (self.code // shift) % size


def normalize(units) -> NormalizedTime:
    """Normalize a run of temporal-literal tokens (or surface strings).

    午後H時 maps to hour H+12, 午前H時 to H, a bare 19時 is taken literally;
    weekday expressions fill only the weekday slot.
    """
    surfaces = [u if isinstance(u, str) else u.surface for u in units]
    if not surfaces:
        raise BadTemporalLiteral("", "empty expression")
    whole = "".join(surfaces).translate(_FW)
    matches = list(_UNIT_RE.finditer(whole))
    if not matches or "".join(m.group(0) for m in matches) != whole:
        raise BadTemporalLiteral(whole, "unrecognized unit")
    fields: dict[str, int] = {}
    weekday = None
    for m in matches:
        if m.group(4):
            if weekday is not None or fields:
                raise BadTemporalLiteral(whole, "weekday cannot combine")
            weekday = _WEEKDAYS.index(m.group(4)) + 1
            continue
        if weekday is not None:
            raise BadTemporalLiteral(whole, "weekday cannot combine")
        ampm, digits, unit = m.group(1), int(m.group(2)), m.group(3)
        if ampm and unit != "時":
            raise BadTemporalLiteral(whole, "午前/午後 only applies to hours")
        if unit == "年":
            name, value = "year", digits
            if not 1 <= value <= 9999:
                raise BadTemporalLiteral(whole, "year out of range")
        elif unit == "月":
            name, value = "month", digits
            if not 1 <= value <= 12:
                raise BadTemporalLiteral(whole, "month out of range")
        elif unit == "日":
            name, value = "day", digits
            if not 1 <= value <= 31:
                raise BadTemporalLiteral(whole, "day out of range")
        else:
            name = "hour"
            if ampm:
                if not 0 <= digits <= 11:
                    raise BadTemporalLiteral(whole, "12-hour value out of range")
                value = digits + (12 if ampm == "午後" else 0)
            else:
                if not 0 <= digits <= 23:
                    raise BadTemporalLiteral(whole, "hour out of range")
                value = digits
        if name in fields:
            raise BadTemporalLiteral(whole, f"duplicate {name}")
        fields[name] = value
    if weekday is not None:
        return NormalizedTime(0, (), weekday)
    mask = tuple(f for f in FIELD_ORDER if f in fields)
    if mask not in GRAN_TAGS:
        raise BadTemporalLiteral(whole, f"non-contiguous fields {mask}")
    code = (fields.get("year", 0) * 10 ** 6 + fields.get("month", 0) * 10 ** 4
            + fields.get("day", 0) * 10 ** 2 + fields.get("hour", 0))
    return NormalizedTime(code, mask)


# ---------------------------------------------------------------------------
# interval relations (Allen's thirteen merged to seven)

BEFORE = "before"
AFTER = "after"
OVERLAPS = "overlaps"
OVERLAPPED_BY = "overlapped_by"
DURING = "during"
CONTAINS = "contains"
EQUAL = "equal"

RELATIONS = (BEFORE, AFTER, OVERLAPS, OVERLAPPED_BY, DURING, CONTAINS, EQUAL)

CONVERSE = {
    BEFORE: AFTER, AFTER: BEFORE,
    OVERLAPS: OVERLAPPED_BY, OVERLAPPED_BY: OVERLAPS,
    DURING: CONTAINS, CONTAINS: DURING,
    EQUAL: EQUAL,
}

Interval = tuple  # (start, end) with start < end


def rel_holds(rel: str, a: Interval, b: Interval) -> bool:
    """Fixed endpoint semantics; meets/starts/finishes are merged away.

    before is a.end <= b.start (meets included); during is non-strict
    containment (equal intervals are during each other).
    """
    a1, a2 = a
    b1, b2 = b
    if rel == BEFORE:
        return a2 <= b1
    if rel == AFTER:
        return b2 <= a1
    if rel == OVERLAPS:
        return a1 < b1 < a2 < b2
    if rel == OVERLAPPED_BY:
        return b1 < a1 < b2 < a2
    if rel == DURING:
        return b1 <= a1 and a2 <= b2
    if rel == CONTAINS:
        return a1 <= b1 and b2 <= a2
    if rel == EQUAL:
        return a1 == b1 and a2 == b2
    raise ValueError(f"unknown relation {rel!r}")


def holding_relations(a: Interval, b: Interval) -> set[str]:
    return {rel for rel in RELATIONS if rel_holds(rel, a, b)}
