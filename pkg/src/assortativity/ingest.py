"""Build a matching matrix from couple-level CSV records."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .errors import AllZero, MissingThreshold, ParseError
from .matrix import MatchingMatrix, to_fraction

REQUIRED_COLUMNS = ("man_type", "woman_type")
_CELL = {("H", "H"): 0, ("H", "L"): 1, ("L", "H"): 2, ("L", "L"): 3}


@dataclass(frozen=True)
class CoupleRecord:
    man_type: str
    woman_type: str
    weight: Fraction = Fraction(1)


def _exact(text: str, what: str, line: int) -> Fraction:
    # Fraction parses decimal strings exactly ("0.1" -> 1/10), never via float.
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"{what} {text!r} is not a number", line) from None


def classify(raw: str, threshold: Fraction | None, column: str, line: int) -> str:
    """Map a categorical H/L label or a numeric value to 'H' or 'L'."""
    label = raw.strip().upper()
    if label in ("H", "L"):
        return label
    if not label:
        raise ParseError(f"empty {column}", line)
    value = _exact(raw, column, line)
    if threshold is None:
        raise MissingThreshold(f"line {line}: numeric {column} {raw!r} needs a binning threshold")
    return "H" if value > threshold else "L"


def read_records(path: str | Path, threshold=None) -> list[CoupleRecord]:
    threshold = None if threshold is None else to_fraction(threshold)
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        header = [h.strip() for h in (reader.fieldnames or [])]
        missing = [c for c in REQUIRED_COLUMNS if c not in header]
        if missing:
            raise ParseError(f"header lacks column(s) {', '.join(missing)}", 1)
        reader.fieldnames = header
        records = []
        for row in reader:
            line = reader.line_num
            if None in row:
                raise ParseError("too many fields", line)
            man = classify(row["man_type"] or "", threshold, "man_type", line)
            woman = classify(row["woman_type"] or "", threshold, "woman_type", line)
            raw_weight = (row.get("weight") or "").strip()
            weight = _exact(raw_weight, "weight", line) if raw_weight else Fraction(1)
            if weight < 0:
                raise ParseError(f"negative weight {raw_weight}", line)
            records.append(CoupleRecord(man, woman, weight))
    return records


def tabulate(records) -> MatchingMatrix:
    cells = [Fraction(0)] * 4
    for rec in records:
        cells[_CELL[rec.man_type, rec.woman_type]] += rec.weight
    if not any(cells):
        raise AllZero("no positive weight accumulated into any cell")
    return MatchingMatrix(*cells)


def ingest_csv(path: str | Path, threshold=None) -> MatchingMatrix:
    """a = total weight of (H, H) couples, b = (H, L), c = (L, H), d = (L, L).

    Numeric type columns are binned as H iff value > threshold.
    """
    return tabulate(read_records(path, threshold))
