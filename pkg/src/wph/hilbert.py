"""Counting monomials of given weighted degree, and plurigenera built on it.

N_w(m) is the number of exponent tuples e >= 0 with sum_i e_i * a_i = m,
i.e. the coefficient of t^m in prod_i 1/(1 - t^{a_i}).  For a quasi-smooth
well-formed hypersurface of degree d whose canonical class is O(alpha) with
alpha >= 1, the m-th plurigenus is N(m*alpha) - N(m*alpha - d).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Sequence

from . import config
from .core import Weights
from .errors import BudgetError

if TYPE_CHECKING:  # pragma: no cover
    from .hypersurface import WeightedHypersurface

ENUM_MAX_DEGREE = 200
ENUM_MAX_LENGTH = 8


def _entries(w: "Weights | Iterable[int]") -> tuple[int, ...]:
    # counting works for any nonempty positive tuple, including length 1
    entries = w.entries if isinstance(w, Weights) else tuple(w)
    if not entries:
        raise ValueError("need at least one weight")
    if any(not isinstance(a, int) or isinstance(a, bool) or a < 1 for a in entries):
        raise ValueError("weights must be positive integers")
    return entries


def _raw_table(entries: tuple[int, ...], up_to: int) -> list[int]:
    cap = config.table_cap()
    if up_to + 1 > cap:
        raise BudgetError(f"count table of {up_to + 1} cells exceeds cap {cap}")
    counts = [0] * (up_to + 1)
    counts[0] = 1
    for a in entries:
        for m in range(a, up_to + 1):
            counts[m] += counts[m - a]
    return counts


@dataclass(frozen=True)
class MonomialCountTable:
    """Counts N(0), ..., N(max_degree) for one weight tuple, built once."""

    weights: tuple[int, ...]
    counts: tuple[int, ...]

    @classmethod
    def build(cls, w: "Weights | Iterable[int]", max_degree: int) -> "MonomialCountTable":
        entries = _entries(w)
        if max_degree < 0:
            raise ValueError("max_degree must be >= 0")
        return cls(entries, tuple(_raw_table(entries, max_degree)))

    @property
    def max_degree(self) -> int:
        return len(self.counts) - 1

    def count(self, m: int) -> int:
        if m < 0:
            return 0
        if m > self.max_degree:
            raise ValueError(f"table built to degree {self.max_degree}, asked for {m}")
        return self.counts[m]


def monomial_count(w: "Weights | Iterable[int]", m: int) -> int:
    """Number of monomials of weighted degree m (0 for negative m)."""
    entries = _entries(w)
    if m < 0:
        return 0
    if m == 0:
        return 1
    return _raw_table(entries, m)[m]


def monomial_count_enum(w: "Weights | Iterable[int]", m: int) -> int:
    """Independent oracle: recursive exponent enumeration, small inputs only."""
    entries = _entries(w)
    if m < 0:
        return 0
    if m > ENUM_MAX_DEGREE or len(entries) > ENUM_MAX_LENGTH:
        raise BudgetError(
            f"enumeration limited to degree {ENUM_MAX_DEGREE} and {ENUM_MAX_LENGTH} weights"
        )

    def rec(i: int, remaining: int) -> int:
        if i == len(entries) - 1:
            return 1 if remaining % entries[i] == 0 else 0
        a = entries[i]
        return sum(rec(i + 1, remaining - e * a) for e in range(remaining // a + 1))

    return rec(0, m)


def variables_present(w: "Weights | Iterable[int]", t: int) -> set[int]:
    """Indices of variables appearing in some monomial of weighted degree t.

    Variable i appears exactly when t >= a_i and degree t - a_i is realisable
    by the full weight tuple (the monomial may reuse variable i itself).
    """
    entries = _entries(w)
    if t < 0:
        raise ValueError("degree must be >= 0")
    if t == 0:
        return set()
    table = _raw_table(entries, t)
    return {i for i, a in enumerate(entries) if t >= a and table[t - a] > 0}


def plurigenus(x: "WeightedHypersurface", m: int) -> int:
    """Dimension of the degree-(m*alpha) graded piece minus the degree-shifted one.

    Valid for quasi-smooth, well-formed hypersurfaces with canonical class
    O(alpha), alpha >= 1; quasi-smoothness is the caller's responsibility
    (family verifiers check it explicitly, the kernel here stays fast).
    """
    if m < 1:
        raise ValueError("plurigenus index must be >= 1")
    alpha = x.amplitude
    if alpha < 1:
        raise ValueError(f"amplitude {alpha} < 1: plurigenus formula not applicable")
    top = m * alpha
    table = _raw_table(_entries(x.weights), top)
    low = top - x.degree
    return table[top] - (table[low] if low >= 0 else 0)


def plurigenera_table(x: "WeightedHypersurface", up_to: int) -> tuple[int, ...]:
    """(P_1, ..., P_up_to), sharing one count table."""
    if up_to < 0:
        raise ValueError("up_to must be >= 0")
    if up_to == 0:
        return ()
    alpha = x.amplitude
    if alpha < 1:
        raise ValueError(f"amplitude {alpha} < 1: plurigenus formula not applicable")
    table = _raw_table(_entries(x.weights), up_to * alpha)
    out = []
    for m in range(1, up_to + 1):
        top = m * alpha
        low = top - x.degree
        out.append(table[top] - (table[low] if low >= 0 else 0))
    return tuple(out)


def vanishing_threshold(x: "WeightedHypersurface", max_total_degree: int | None = None) -> int:
    """Largest m with P_1 = ... = P_m = 0 (0 when P_1 already nonzero).

    Scans m upward while m*alpha stays within the cap (ten times the degree
    by default) and raises if every scanned plurigenus vanishes.
    """
    alpha = x.amplitude
    if alpha < 1:
        raise ValueError(f"amplitude {alpha} < 1: plurigenus formula not applicable")
    cap = 10 * x.degree if max_total_degree is None else max_total_degree
    m = 1
    while m * alpha <= cap:
        if plurigenus(x, m) != 0:
            return m - 1
        m += 1
    raise BudgetError(
        f"no nonzero plurigenus with m*alpha <= {cap}; raise the cap to scan further"
    )
