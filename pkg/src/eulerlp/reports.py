"""Congruence check reports and their JSON/CSV serialization."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction

from .padic import PadicNumber


def format_rational(q: Fraction | int) -> str:
    """Serialize a rational as an explicit "num/den" string."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational`; bare integers are accepted."""
    return Fraction(text.strip())


@dataclass(frozen=True)
class CongruenceReport:
    """Outcome of one check: both sides in serialized form plus a match flag.

    For p-adic checks lhs/rhs are PadicNumber dicts and ``precision`` gives
    the number of compared digits; for exact rational identities lhs/rhs
    are "num/den" strings and p/precision/lhs_valuation are None.
    """

    check: str
    p: int | None
    params: dict
    lhs: object
    rhs: object
    precision: int | None
    match: bool
    lhs_valuation: int | None

    def as_dict(self) -> dict:
        return {
            "check": self.check,
            "p": self.p,
            "params": self.params,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "precision": self.precision,
            "match": self.match,
            "lhs_valuation": self.lhs_valuation,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), separators=(",", ":"))


def padic_report(
    check: str, params: dict, lhs: PadicNumber, rhs: PadicNumber, digits: int
) -> CongruenceReport:
    """Report comparing two p-adic values mod p^digits."""
    lhs = lhs.reduce(digits)
    rhs = rhs.reduce(digits)
    return CongruenceReport(
        check=check,
        p=lhs.context.p,
        params=params,
        lhs=lhs.as_json_dict(),
        rhs=rhs.as_json_dict(),
        precision=digits,
        match=lhs.residue == rhs.residue,
        lhs_valuation=lhs.valuation,
    )


def rational_report(
    check: str, params: dict, lhs: Fraction | int, rhs: Fraction | int
) -> CongruenceReport:
    """Report comparing two exact rationals."""
    lhs = Fraction(lhs)
    rhs = Fraction(rhs)
    return CongruenceReport(
        check=check,
        p=None,
        params=params,
        lhs=format_rational(lhs),
        rhs=format_rational(rhs),
        precision=None,
        match=lhs == rhs,
        lhs_valuation=None,
    )


CSV_COLUMNS = ("check", "p", "params", "lhs", "rhs", "precision", "match", "lhs_valuation")


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (dict, list)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def reports_to_jsonl(reports) -> str:
    return "\n".join(r.to_json() for r in reports)


def reports_to_csv(reports) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in reports:
        d = r.as_dict()
        writer.writerow([_csv_cell(d[col]) for col in CSV_COLUMNS])
    return buf.getvalue().rstrip("\n")
