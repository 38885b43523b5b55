"""Reid-Tai classification of cyclic quotient singularities.

A quotient 1/r(b_1, ..., b_m) is canonical if and only if

    (1/r) * sum_i ((j * b_i) mod r)  >=  1    for every j in [1, r-1],

and terminal when the inequality is strict for every j.  The loop runs over
all j, with no coprimality restriction; inputs where some multiplier acts as
a quasi-reflection (at most one coordinate moved) are flagged for reporting
but classified by the same rule.

`ambient_canonical` decides whether a well-formed weighted projective space
has only canonical singularities by classifying its coordinate points alone:
if a stratum of order h fails the criterion at multiplier j, the coordinate
point of any member weight m*h fails at multiplier m*j, so coordinate points
already witness any failure.  `ambient_canonical_bruteforce` re-derives the
same verdict from every singular stratum and serves as the oracle for that
reduction.
"""

from __future__ import annotations

import enum
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import config
from .core import (
    CyclicQuotientSingularity,
    Weights,
    coordinate_point_types,
    parse_entries,
    singular_strata,
    stratum_quotient_type,
    well_formed,
)
from .errors import BudgetError, NotWellFormedError

__all__ = [
    "CyclicQuotientSingularity",
    "SingularityClass",
    "QuotientReport",
    "reid_tai_sum",
    "reid_tai_min",
    "classify_quotient",
    "quotient_report",
    "has_quasi_reflection",
    "ambient_canonical",
    "ambient_canonical_bruteforce",
    "parse_quotient",
]


class SingularityClass(enum.IntEnum):
    """Mildness classes, ordered from worst to best."""

    NOT_CANONICAL = 0
    CANONICAL_NOT_TERMINAL = 1
    TERMINAL = 2
    SMOOTH = 3

    @property
    def is_canonical(self) -> bool:
        return self >= SingularityClass.CANONICAL_NOT_TERMINAL

    @property
    def is_terminal(self) -> bool:
        return self >= SingularityClass.TERMINAL

    def __str__(self) -> str:
        return _CLASS_NAMES[self]


_CLASS_NAMES = {
    SingularityClass.NOT_CANONICAL: "NotCanonical",
    SingularityClass.CANONICAL_NOT_TERMINAL: "CanonicalNotTerminal",
    SingularityClass.TERMINAL: "Terminal",
    SingularityClass.SMOOTH: "Smooth",
}


def _residue_counts(s: CyclicQuotientSingularity) -> Counter[int]:
    # grouping by residue keeps the j-loop O(r * distinct residues)
    return Counter(b % s.order for b in s.weights)


def _check_order(r: int) -> None:
    cap = config.order_cap()
    if r > cap:
        raise BudgetError(f"group order {r} exceeds cap {cap}")


def reid_tai_sum(s: CyclicQuotientSingularity, j: int) -> Fraction:
    """The value (1/r) * sum_i ((j * b_i) mod r) for one multiplier j."""
    r = s.order
    if not 1 <= j <= r - 1:
        raise ValueError(f"multiplier must lie in [1, {r - 1}], got {j}")
    counts = _residue_counts(s)
    total = sum(cnt * ((j * rho) % r) for rho, cnt in counts.items())
    return Fraction(total, r)


def reid_tai_min(s: CyclicQuotientSingularity) -> Fraction:
    """Minimum of reid_tai_sum over every multiplier j in [1, r-1]."""
    return _min_sum(s)[0]


def _min_sum(s: CyclicQuotientSingularity) -> tuple[Fraction, int]:
    r = s.order
    if r < 2:
        raise ValueError("order-1 quotients are smooth; no multipliers to scan")
    _check_order(r)
    counts = _residue_counts(s)
    best_total: int | None = None
    best_j = 0
    for j in range(1, r):
        total = sum(cnt * ((j * rho) % r) for rho, cnt in counts.items())
        if best_total is None or total < best_total:
            best_total, best_j = total, j
    assert best_total is not None
    return Fraction(best_total, r), best_j


def classify_quotient(s: CyclicQuotientSingularity) -> SingularityClass:
    """Classify via the criterion: min > 1 terminal, = 1 canonical, < 1 neither.

    Returns early once a multiplier drops below 1; the exact minimum is only
    needed when all multipliers pass, to separate terminal from canonical.
    """
    r = s.order
    if r == 1:
        return SingularityClass.SMOOTH
    _check_order(r)
    counts = _residue_counts(s)
    saw_exactly_one = False
    for j in range(1, r):
        total = sum(cnt * ((j * rho) % r) for rho, cnt in counts.items())
        if total < r:
            return SingularityClass.NOT_CANONICAL
        if total == r:
            saw_exactly_one = True
    if saw_exactly_one:
        return SingularityClass.CANONICAL_NOT_TERMINAL
    return SingularityClass.TERMINAL


def has_quasi_reflection(s: CyclicQuotientSingularity) -> bool:
    """True when some multiplier moves at most one coordinate.

    Such group elements are quasi-reflections; the classification rule is
    stated for actions without them, so reports carry this flag.  The verdict
    itself is not altered.
    """
    r = s.order
    if r < 2:
        return False
    _check_order(r)
    counts = _residue_counts(s)
    for j in range(1, r):
        moved = sum(cnt for rho, cnt in counts.items() if (j * rho) % r != 0)
        if moved <= 1:
            return True
    return False


@dataclass(frozen=True)
class QuotientReport:
    """Classification of one quotient plus the attained minimum for display."""

    singularity: CyclicQuotientSingularity
    sclass: SingularityClass
    minimum: Fraction | None
    at_multiplier: int | None
    quasi_reflection: bool

    def __str__(self) -> str:
        head = f"{self.singularity}: {self.sclass}"
        if self.minimum is not None:
            head += f" min={self.minimum} at j={self.at_multiplier}"
        if self.quasi_reflection:
            head += " [quasi-reflection pattern]"
        return head


def quotient_report(s: CyclicQuotientSingularity) -> QuotientReport:
    """Full (non-short-circuiting) classification with diagnostics."""
    if s.order == 1:
        return QuotientReport(s, SingularityClass.SMOOTH, None, None, False)
    minimum, at_j = _min_sum(s)
    if minimum > 1:
        sclass = SingularityClass.TERMINAL
    elif minimum == 1:
        sclass = SingularityClass.CANONICAL_NOT_TERMINAL
    else:
        sclass = SingularityClass.NOT_CANONICAL
    return QuotientReport(s, sclass, minimum, at_j, has_quasi_reflection(s))


def _require_well_formed(w: Weights) -> None:
    if not well_formed(w):
        raise NotWellFormedError(f"weights {w} are not well-formed")


def ambient_canonical(w: Weights | Iterable[int]) -> bool:
    """True when every coordinate point of the (well-formed) space is canonical.

    Checking coordinate points suffices for the full space; see the module
    docstring.  Non-well-formed input is rejected, not rescaled.
    """
    weights = Weights.coerce(w)
    _require_well_formed(weights)
    return all(
        classify_quotient(q).is_canonical for _, q in coordinate_point_types(weights)
    )


def ambient_canonical_bruteforce(w: Weights | Iterable[int]) -> bool:
    """Oracle for `ambient_canonical`: classify every singular stratum."""
    weights = Weights.coerce(w)
    _require_well_formed(weights)
    for stratum in singular_strata(weights):
        q = stratum_quotient_type(weights, stratum.indices, min(stratum.indices))
        if not classify_quotient(q).is_canonical:
            return False
    return True


_QUOTIENT_RE = re.compile(r"^\s*1\s*/\s*(\d+)\s*\(\s*([0-9,^\s]*?)\s*\)\s*$")


def parse_quotient(text: str) -> CyclicQuotientSingularity:
    """Parse a literal such as "1/6(2,2,3)" (runs abbreviate as "1^4,b")."""
    m = _QUOTIENT_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse quotient singularity from {text!r}")
    order = int(m.group(1))
    body = m.group(2)
    if not body:
        raise ValueError(f"quotient {text!r} lists no weights")
    return CyclicQuotientSingularity(order, parse_entries(body))
