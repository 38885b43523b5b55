"""Constructors and verifiers for the explicit hypersurface families.

Each constructor builds the weighted hypersurface for one family and returns
a report whose named checks are all computed in exact arithmetic:

* ``consecutive_family(k, l)``: degree (l+3)k(k+1) hypersurface in the space
  with k+2 weights k, 2k-1 weights k+1 and l weights k(k+1); canonical
  ambient, unit amplitude, tiny closed-form volume.
* ``vanishing_witness(n)``: the consecutive family sliced so the member has
  dimension n and its first floor((n+1)/3) - 1 plurigenera vanish, with
  volume strictly below 3^(n+1)/(n-1)^n.
* ``degree_bound_witness(n)``: the slice witnessing that no pluricanonical
  map below degree k(k+1) >= n(n-3)/9 can be generically finite (the
  top-weight variables cannot appear in those degrees).
* ``ample_witness(n)``: double covers with ample canonical class whose
  pluricanonical maps below degree n+3 (n even) / n+2 (n odd) are not
  birational.
* ``volume_witness(r, s)``: a member of assigned volume r/s, built from the
  smallest b with b*r = 1 mod s and the smallest compatible a; quasi-smooth
  with at most one, terminal, singular point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import CyclicQuotientSingularity, Weights, well_formed
from .errors import ParameterError
from .hilbert import plurigenus, variables_present
from .hypersurface import WeightedHypersurface
from .singularity import SingularityClass, classify_quotient, ambient_canonical

FAMILY_IDS = ("prop", "thm3", "thm4", "ample", "volume")


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def __str__(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"[{tag}] {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass(frozen=True)
class FamilyReport:
    family: str
    parameters: dict[str, int]
    hypersurface: WeightedHypersurface
    checks: tuple[Check, ...]
    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "parameters": dict(self.parameters),
            "weights": str(self.hypersurface.weights),
            "degree": self.hypersurface.degree,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
            "notes": list(self.notes),
            "passed": self.passed,
        }

    def __str__(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.parameters.items())
        lines = [f"family {self.family} ({params}): {self.hypersurface}"]
        lines += [f"  {c}" for c in self.checks]
        lines += [f"  note: {n}" for n in self.notes]
        return "\n".join(lines)


@dataclass(frozen=True)
class AggregateReport:
    reports: tuple[FamilyReport, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def __str__(self) -> str:
        lines = [str(r) for r in self.reports]
        verdict = "all checks passed" if self.passed else "SOME CHECKS FAILED"
        lines.append(f"{len(self.reports)} reports: {verdict}")
        return "\n".join(lines)


def _consecutive_weights(k: int, l: int) -> tuple[tuple[int, ...], int]:
    if k < 2:
        raise ParameterError("k must be >= 2 (the weights are not well-formed below that)")
    if l < 0:
        raise ParameterError("l must be >= 0")
    weights = (k,) * (k + 2) + (k + 1,) * (2 * k - 1) + (k * (k + 1),) * l
    degree = (l + 3) * k * (k + 1)
    return weights, degree


def consecutive_family(k: int, l: int) -> FamilyReport:
    """Family on consecutive weights k, k+1 (and their product); id "prop"."""
    weights, degree = _consecutive_weights(k, l)
    x = WeightedHypersurface(Weights(weights), degree)
    closed_form = Fraction(l + 3, k ** (k + 1 + l) * (k + 1) ** (2 * k - 2 + l))
    checks = (
        Check("weights are well-formed", well_formed(x.weights)),
        Check("ambient space is canonical", ambient_canonical(x.weights)),
        Check("amplitude is 1", x.amplitude == 1, f"amplitude={x.amplitude}"),
        Check(
            "member dimension is 3k+l-1",
            x.dimension == 3 * k + l - 1,
            f"dimension={x.dimension}",
        ),
        Check(
            "volume matches the closed form",
            x.volume() == closed_form,
            f"volume={x.volume()} expected={closed_form}",
        ),
        Check("general member is quasi-smooth", x.quasi_smooth()),
    )
    return FamilyReport(
        "prop", {"k": k, "l": l, "d": degree}, x, checks
    )


def vanishing_witness(n: int) -> FamilyReport:
    """Dimension-n member with plurigenera 1..floor((n+1)/3)-1 all zero; id "thm3"."""
    if n < 5:
        raise ParameterError("n must be >= 5")
    k = (n + 1) // 3
    l = n + 1 - 3 * k
    weights, degree = _consecutive_weights(k, l)
    x = WeightedHypersurface(Weights(weights), degree)

    genera = [plurigenus(x, m) for m in range(1, k)]
    bound = Fraction(3 ** (n + 1), (n - 1) ** n)
    vol = x.volume()
    checks = (
        Check("weights are well-formed", well_formed(x.weights)),
        Check("ambient space is canonical", ambient_canonical(x.weights)),
        Check("amplitude is 1", x.amplitude == 1),
        Check("member dimension is n", x.dimension == n, f"dimension={x.dimension}"),
        Check(
            f"plurigenera P_1..P_{k - 1} vanish",
            all(p == 0 for p in genera),
            f"values={genera}",
        ),
        Check(
            "volume below 3^(n+1)/(n-1)^n",
            vol < bound,
            f"{vol} < {bound}",
        ),
    )
    notes = (f"observed P_{k} = {plurigenus(x, k)} (reported, not asserted)",)
    return FamilyReport("thm3", {"n": n, "k": k, "l": l, "d": degree}, x, checks, notes)


def degree_bound_witness(n: int) -> FamilyReport:
    """Dimension-n member whose maps below degree k(k+1) miss variables; id "thm4"."""
    if n < 7:
        raise ParameterError("n must be >= 7")
    k = (n - 1) // 3
    l = n + 1 - 3 * k
    assert 2 <= l <= 4
    weights, degree = _consecutive_weights(k, l)
    x = WeightedHypersurface(Weights(weights), degree)

    obstruction = k * (k + 1)
    top = {i for i, a in enumerate(x.weights) if a == obstruction}
    absent = all(
        top.isdisjoint(variables_present(x.weights, t)) for t in range(obstruction)
    )
    bound = Fraction(n * (n - 3), 9)
    checks = (
        Check("weights are well-formed", well_formed(x.weights)),
        Check("ambient space is canonical", ambient_canonical(x.weights)),
        Check("amplitude is 1", x.amplitude == 1),
        Check("member dimension is n", x.dimension == n, f"dimension={x.dimension}"),
        Check(
            f"weight-{obstruction} variables absent below degree {obstruction}",
            absent,
            f"checked degrees 0..{obstruction - 1}",
        ),
        Check(
            "obstruction degree at least n(n-3)/9",
            Fraction(obstruction) >= bound,
            f"{obstruction} >= {bound}",
        ),
    )
    return FamilyReport(
        "thm4",
        {"n": n, "k": k, "l": l, "d": degree, "obstruction_degree": obstruction},
        x,
        checks,
    )


def ample_witness(n: int) -> FamilyReport:
    """Double cover with ample canonical class; maps below n+3 / n+2 not birational."""
    if n < 1:
        raise ParameterError("n must be >= 1")
    if n % 2 == 0:
        d = n + 3
        weights = (1,) * n + (2, d)
    else:
        d = n + 2
        weights = (1,) * (n + 1) + (d,)
    x = WeightedHypersurface(Weights(weights), 2 * d)

    top_index = len(weights) - 1
    missed = [
        (i, x.weights[i])
        for i, a in enumerate(x.weights)
        if a > 1 and not x.contains_coordinate_point(i)
    ]
    singular = [i for i, a in enumerate(x.weights) if a > 1]
    all_missed = len(missed) == len(singular)
    top_absent = all(
        top_index not in variables_present(x.weights, t) for t in range(d)
    )
    checks = (
        Check("amplitude is 1", x.amplitude == 1),
        Check("member dimension is n", x.dimension == n, f"dimension={x.dimension}"),
        Check(
            "general member misses every ambient singular point",
            all_missed,
            f"weights at missed points: {[a for _, a in missed]}",
        ),
        Check("general member is quasi-smooth", x.quasi_smooth()),
        Check(
            f"top-weight variable absent below degree {d}",
            top_absent,
            f"checked degrees 0..{d - 1}",
        ),
    )
    notes = [
        f"maps given by degrees t < {d} drop the top variable, so none is birational",
        "member is smooth: quasi-smooth and disjoint from the singular locus",
    ]
    if n == 1:
        notes.append("the member is a smooth curve of genus 2")
    return FamilyReport(
        "ample",
        {"n": n, "d": d, "member_degree": 2 * d},
        x,
        checks,
        tuple(notes),
    )


def _choose_volume_parameters(r: int, s: int) -> tuple[int, int, int, int]:
    """Deterministic (a, b, t, m): smallest b with b*r = 1 mod s admitting a
    valid a, then smallest a coprime to s and b giving at least max(s, 1)
    unit weights."""
    b = next(b for b in range(1, s + 1) if (b * r) % s == 1 % s)
    while r * b <= 1:
        # unit-weight count m = a(rb-1) - s - b - 1 cannot reach 1 for any a
        b += s
    t = (r * b - 1) // s
    a = 1
    while True:
        if math.gcd(a, s) == 1 and math.gcd(a, b) == 1:
            m = r * a * b + 1 - a - s - b - 2
            if m >= max(s, 1):
                return a, b, t, m
        a += 1


def volume_witness(
    r: int, s: int, a: int | None = None, b: int | None = None
) -> FamilyReport:
    """Member of exact volume r/s in weights (1^m, a, s, b), degree rab; id "volume".

    The defaults pick the smallest valid parameters; overrides must keep
    b*r = 1 mod s and a coprime to both s and b.  Reports are deterministic:
    the same (r, s) always yields the same construction.
    """
    if r < 1 or s < 1:
        raise ParameterError("volume must be a ratio of positive integers")
    if math.gcd(r, s) != 1:
        raise ParameterError(f"r and s must be coprime, got gcd={math.gcd(r, s)}")

    if b is None and a is None:
        a, b, t, m = _choose_volume_parameters(r, s)
    else:
        if b is None:
            _, b, _, _ = _choose_volume_parameters(r, s)
        if (b * r) % s != 1 % s:
            raise ParameterError(f"b={b} violates b*r = 1 mod s")
        t = (r * b - 1) // s
        if a is None:
            candidate = 1
            while True:
                if math.gcd(candidate, s) == 1 and math.gcd(candidate, b) == 1:
                    m = r * candidate * b + 1 - candidate - s - b - 2
                    if m >= max(s, 1):
                        a = candidate
                        break
                candidate += 1
        if math.gcd(a, s) != 1 or math.gcd(a, b) != 1:
            raise ParameterError(f"a={a} must be coprime to s={s} and b={b}")
        m = r * a * b + 1 - a - s - b - 2
        if m < 1:
            raise ParameterError(
                f"parameters give {m} unit weights; need at least one"
            )

    weights = (1,) * m + (a, s, b)
    degree = r * a * b
    a_index, s_index, b_index = m, m + 1, m + 2
    witnesses = ((s_index, a_index),) if s > 1 else ()
    x = WeightedHypersurface(Weights(weights), degree, point_witnesses=witnesses)

    checks = [
        Check("amplitude is 1", x.amplitude == 1, f"amplitude={x.amplitude}"),
        Check("weights are well-formed", well_formed(x.weights)),
        Check("general member is quasi-smooth", x.quasi_smooth()),
        Check(
            "smoothing monomial has the member's degree",
            t * a * s + a == degree,
            f"s-variable^{t * a} * a-variable has degree {t * a * s + a}",
        ),
        Check(
            "volume equals r/s",
            x.volume() == Fraction(r, s),
            f"volume={x.volume()}",
        ),
    ]
    contained = [
        i for i, w in enumerate(x.weights) if w > 1 and x.contains_coordinate_point(i)
    ]
    if s > 1:
        member_type = x.member_type_at(s_index)
        expected = CyclicQuotientSingularity(s, (1,) * m + (b,))
        checks += [
            Check(
                "member meets exactly the order-s coordinate point",
                contained == [s_index],
                f"contained singular points at indices {contained}",
            ),
            Check(
                "member type at the point is 1/s(1^m, b)",
                member_type == expected,
                f"type={member_type}",
            ),
            Check(
                "member point is terminal",
                member_type is not None
                and classify_quotient(member_type) == SingularityClass.TERMINAL,
            ),
        ]
    else:
        checks.append(
            Check(
                "member misses every singular coordinate point",
                contained == [],
                f"contained singular points at indices {contained}",
            )
        )
    notes = (
        f"with m={m} unit weights the ambient dimension is {m + 2} "
        f"and the member dimension {m + 1}",
    )
    return FamilyReport(
        "volume",
        {"r": r, "s": s, "a": a, "b": b, "t": t, "unit_weights": m, "d": degree},
        x,
        tuple(checks),
        notes,
    )


DEFAULT_VOLUME_TARGETS: tuple[tuple[int, int], ...] = (
    (1, 2),
    (2, 3),
    (5, 7),
    (3, 1),
    (22, 7),
    (355, 113),
)


def verify_all(
    consecutive_ks: Iterable[int] = range(2, 7),
    consecutive_ls: Iterable[int] = range(0, 5),
    vanishing_ns: Iterable[int] = range(5, 31),
    bound_ns: Iterable[int] = range(7, 31),
    ample_ns: Iterable[int] = range(1, 21),
    volume_targets: Sequence[tuple[int, int]] = DEFAULT_VOLUME_TARGETS,
) -> AggregateReport:
    """Run every family verifier over the given ranges, in parameter order."""
    reports: list[FamilyReport] = []
    for k in consecutive_ks:
        for l in consecutive_ls:
            reports.append(consecutive_family(k, l))
    reports.extend(vanishing_witness(n) for n in vanishing_ns)
    reports.extend(degree_bound_witness(n) for n in bound_ns)
    reports.extend(ample_witness(n) for n in ample_ns)
    reports.extend(volume_witness(r, s) for r, s in volume_targets)
    return AggregateReport(tuple(reports))


_CONSTRUCTORS = {
    "prop": consecutive_family,
    "thm3": vanishing_witness,
    "thm4": degree_bound_witness,
    "ample": ample_witness,
    "volume": volume_witness,
}


def family_constructor(family_id: str):
    """Look up a constructor by its stable report id."""
    try:
        return _CONSTRUCTORS[family_id]
    except KeyError:
        raise ParameterError(
            f"unknown family {family_id!r}; choose from {', '.join(FAMILY_IDS)}"
        ) from None
