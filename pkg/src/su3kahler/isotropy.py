"""Isotropy groups and freeness of the weighted 2-torus action.

A point of the level set with z supported on I and w supported on J has
isotropy equal to the joint kernel of the characters t -> t^{A_i} (i in I)
and t -> t^{B_j} (j in J). Stacking those exponent vectors into an integer
matrix, the kernel is read off the Smith normal form: full rank gives the
finite group Z/d1 x Z/d2, a rank drop gives a positive-dimensional
stabilizer. Freeness of the whole action reduces to every mixed pair
(A_i, B_j), i != j, being a lattice basis.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .conegeom import (
    cross,
    is_unimodular_pair,
    scalar_to_json,
    smith_invariant_factors,
)
from .weights import (
    DerivedConeData,
    WeightSystem,
    derive,
    positive_combination,
    cone_condition_holds,
)

__all__ = [
    "SupportPattern",
    "IsotropyGroup",
    "FreenessVerdict",
    "Classification",
    "isotropy_at_support",
    "freeness_check",
    "classify_quotient",
    "StratumReport",
    "singular_stratum_census",
    "census_to_json",
]


@dataclass(frozen=True)
class SupportPattern:
    """Nonzero index sets (I for z, J for w), 1-based.

    The quadric equation sum z_j w_j = 0 forces some i in I, j in J with
    i != j whenever both vectors are nonzero, so patterns without such a
    pair are rejected.
    """

    i_set: tuple[int, ...]
    j_set: tuple[int, ...]

    def __post_init__(self):
        i_set = tuple(sorted(set(self.i_set)))
        j_set = tuple(sorted(set(self.j_set)))
        if not i_set or not j_set:
            raise ValueError("support sets must be nonempty")
        if not set(i_set) <= {1, 2, 3} or not set(j_set) <= {1, 2, 3}:
            raise ValueError("support indices must lie in {1, 2, 3}")
        if not any(i != j for i in i_set for j in j_set):
            raise ValueError("supports must admit a pair i != j")
        object.__setattr__(self, "i_set", i_set)
        object.__setattr__(self, "j_set", j_set)

    @property
    def is_singleton(self) -> bool:
        return len(self.i_set) == 1 and len(self.j_set) == 1

    @property
    def is_full(self) -> bool:
        return self.i_set == (1, 2, 3) and self.j_set == (1, 2, 3)


@dataclass(frozen=True)
class IsotropyGroup:
    """Either a finite abelian group in invariant-factor form or a marker
    for a positive-dimensional stabilizer (exponent matrix rank < 2)."""

    kind: str  # "finite" | "positive-dimensional"
    factors: tuple[int, ...] = ()
    rank_deficit: int = 0

    @classmethod
    def finite(cls, factors: tuple[int, ...]) -> "IsotropyGroup":
        return cls("finite", factors=factors)

    @classmethod
    def positive_dimensional(cls, rank_deficit: int) -> "IsotropyGroup":
        return cls("positive-dimensional", rank_deficit=rank_deficit)

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    @property
    def order(self) -> int:
        if not self.is_finite:
            raise ValueError("positive-dimensional stabilizer has no order")
        out = 1
        for f in self.factors:
            out *= f
        return out

    @property
    def is_trivial(self) -> bool:
        return self.is_finite and self.order == 1

    def to_json(self) -> dict:
        if self.is_finite:
            return {"kind": "finite", "order": self.order, "factors": list(self.factors)}
        return {"kind": "positive-dimensional", "rank_deficit": self.rank_deficit}


def _integer_rows(d: DerivedConeData, pattern: SupportPattern) -> list[tuple[int, int]]:
    rows = [d.a[i - 1] for i in pattern.i_set] + [d.b[j - 1] for j in pattern.j_set]
    out = []
    for row in rows:
        fx, fy = Fraction(row[0]), Fraction(row[1])
        if fx.denominator != 1 or fy.denominator != 1:
            raise ValueError("integer cone data required for isotropy computations")
        out.append((fx.numerator, fy.numerator))
    return out


def isotropy_at_support(d: DerivedConeData, pattern: SupportPattern) -> IsotropyGroup:
    """Stabilizer of any point whose supports are exactly the given pattern.

    The kernel of t -> (t^{E_1}, ..., t^{E_k}) for the stacked exponent
    rows E is Z/d1 x Z/d2 when the rows have rank 2 with invariant factors
    (d1, d2); otherwise a subtorus survives.
    """
    rows = _integer_rows(d, pattern)
    rank, factors = smith_invariant_factors(rows)
    if rank < 2:
        return IsotropyGroup.positive_dimensional(2 - rank)
    return IsotropyGroup.finite(factors)


@dataclass(frozen=True)
class FreenessVerdict:
    free: bool
    failing_pair: tuple[int, int, int] | None  # (i, j, |det(A_i, B_j)|)
    classification_consistent: bool

    def to_json(self) -> dict:
        return {
            "free": self.free,
            "failing_pair": None if self.failing_pair is None else list(self.failing_pair),
            "classification_consistent": self.classification_consistent,
        }


def freeness_check(d: DerivedConeData, ws: WeightSystem | None = None) -> FreenessVerdict:
    """The action is free iff every (A_i, B_j) with i != j is a lattice basis.

    When the originating weight system is supplied and passes the cone
    condition, the verdict is cross-checked against the homomorphism-level
    characterization of :func:`classify_quotient`.
    """
    failing = None
    for j in range(3):
        for i in range(3):
            if i == j:
                continue
            det = cross(d.a[i], d.b[j])
            if abs(det) != 1:
                failing = (i + 1, j + 1, abs(int(det)))
                break
        if failing is not None:
            break
    free = failing is None
    consistent = True
    if ws is not None and cone_condition_holds(d):
        classification = classify_quotient(ws)
        consistent = (classification is Classification.FREE_FLAG_CASE) == free
    return FreenessVerdict(free, failing, consistent)


class Classification(enum.Enum):
    FREE_FLAG_CASE = "FreeFlagCase"
    ORBIFOLD_CASE = "OrbifoldCase"


def classify_quotient(ws: WeightSystem) -> Classification:
    """Free quotient (the flag variety) versus genuine orbifold quotient.

    Under the cone condition the action is free exactly when the left
    homomorphism is trivial and the right one is a torus isomorphism; a
    mismatch with the pairwise lattice-basis criterion cannot occur and is
    raised as an internal error.
    """
    d = derive(ws)
    if not cone_condition_holds(d):
        raise ValueError("classification requires the cone condition to hold")
    left_trivial = all(v == (0, 0) for v in ws.wl)
    right_iso = is_unimodular_pair(ws.wr[0], ws.wr[1])
    by_homs = left_trivial and right_iso
    by_pairs = freeness_check(d).free
    if by_homs != by_pairs:
        raise RuntimeError(
            f"freeness characterizations disagree on {ws!r}: "
            f"homomorphism test {by_homs}, lattice-pair test {by_pairs}"
        )
    return Classification.FREE_FLAG_CASE if by_homs else Classification.ORBIFOLD_CASE


@dataclass(frozen=True)
class StratumReport:
    pattern: SupportPattern
    isotropy: IsotropyGroup
    realizable: bool | None  # None: not determined
    witness: tuple[Fraction, Fraction] | None

    def to_json(self) -> dict:
        return {
            "I": list(self.pattern.i_set),
            "J": list(self.pattern.j_set),
            "isotropy": self.isotropy.to_json(),
            "realizable": "not determined" if self.realizable is None else self.realizable,
            "witness_point": None
            if self.witness is None
            else [scalar_to_json(self.witness[0]), scalar_to_json(self.witness[1])],
        }


def singular_stratum_census(d: DerivedConeData) -> list[StratumReport]:
    """Isotropy of every support pattern, with realizability where decidable.

    Singleton patterns {i} x {j}, i != j, are realizable exactly when
    C = a*A_i + b*B_j with a, b > 0; the witness stores (a, b) and the
    point has z_i = sqrt(a), w_j = sqrt(b). The full-support pattern is
    realizable because the strata with a vanishing coordinate form finitely
    many proper closed subsets. Intermediate patterns would require a
    nonconvex phase-feasibility argument, so they are reported with
    isotropy only.
    """
    subsets = [
        tuple(s)
        for size in (1, 2, 3)
        for s in itertools.combinations((1, 2, 3), size)
    ]
    reports = []
    patterns = []
    for i_set in subsets:
        for j_set in subsets:
            try:
                patterns.append(SupportPattern(i_set, j_set))
            except ValueError:
                continue  # only I = J = {k} fails the mixed-pair requirement
    patterns.sort(key=lambda p: (len(p.i_set), len(p.j_set), p.i_set, p.j_set))
    for pattern in patterns:
        group = isotropy_at_support(d, pattern)
        realizable: bool | None
        witness = None
        if pattern.is_singleton:
            i, j = pattern.i_set[0], pattern.j_set[0]
            witness = positive_combination(d.c, d.a[i - 1], d.b[j - 1])
            realizable = witness is not None
        elif pattern.is_full:
            realizable = True
        else:
            realizable = None
        reports.append(StratumReport(pattern, group, realizable, witness))
    return reports


def census_to_json(census: list[StratumReport]) -> list[dict]:
    return [r.to_json() for r in census]
