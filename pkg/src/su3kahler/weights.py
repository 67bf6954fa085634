"""Weight systems of double-sided 2-torus actions on SU(3).

A weight system is a pair of integer homomorphism exponents
``wL = (w_1^L, w_2^L, w_3^L)`` and ``wR = (w_1^R, w_2^R, w_3^R)`` in Z^2,
each summing to zero so that the diagonal images land in the maximal
torus. From it we derive the plane configuration

    A_j = w_j^L - w_1^R,   B_j = -w_j^L + w_3^R,   C = -w_1^R + w_3^R,

whose cone geometry governs the whole construction. The separating cone
condition checked by :func:`check_cone_condition` requires C to avoid every cone
spanned by two A's or two B's (rays included) while lying in every mixed
cone(A_i, B_j). Its consequences are the nonemptiness, regularity and
compactness of the moment-map level set, checked independently by
:func:`check_level_set_conditions`, and the deformation path to the round level set,
checked by :func:`check_interpolation_path`.

All checks are exact rational arithmetic; nothing here touches floats.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterator

from .conegeom import (
    ConeMembership,
    MembershipStatus,
    Vec2,
    cross,
    dot,
    find_apex_functional,
    in_cone2,
    in_cone_many,
    is_zero,
    scalar_to_json,
    vadd,
    vec2,
    vec_to_json,
    vscale,
    vsub,
)

__all__ = [
    "WeightSystem",
    "DerivedConeData",
    "cone_data",
    "derive",
    "LevelSetConditions",
    "ConditionReport",
    "check_cone_condition",
    "cone_condition_holds",
    "check_level_set_conditions",
    "positive_combination",
    "WeightSolution",
    "weights_from_cone_data",
    "InterpolationSpec",
    "interpolation_spec",
    "default_interpolation_times",
    "check_interpolation_path",
    "enumerate_admissible_systems",
]

IVec2 = tuple[int, int]


def _ivec(v) -> IVec2:
    x, y = v
    if not isinstance(x, int) or not isinstance(y, int):
        raise ValueError(f"integer weight vector expected, got {v!r}")
    return (x, y)


@dataclass(frozen=True, order=True)
class WeightSystem:
    """Six integer exponent vectors, three per side, each side summing to 0."""

    wl: tuple[IVec2, IVec2, IVec2]
    wr: tuple[IVec2, IVec2, IVec2]

    def __post_init__(self):
        wl = tuple(_ivec(v) for v in self.wl)
        wr = tuple(_ivec(v) for v in self.wr)
        if len(wl) != 3 or len(wr) != 3:
            raise ValueError("exactly three weight vectors per side")
        for side, name in ((wl, "wL"), (wr, "wR")):
            if (sum(v[0] for v in side), sum(v[1] for v in side)) != (0, 0):
                raise ValueError(f"{name} must sum to zero, got {side}")
        object.__setattr__(self, "wl", wl)
        object.__setattr__(self, "wr", wr)

    @classmethod
    def from_json(cls, obj: dict) -> "WeightSystem":
        try:
            wl = tuple((int(a), int(b)) for a, b in obj["wL"])
            wr = tuple((int(a), int(b)) for a, b in obj["wR"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed weight system object: {exc}") from exc
        return cls(wl, wr)

    def to_json(self) -> dict:
        return {"wL": [list(v) for v in self.wl], "wR": [list(v) for v in self.wr]}


@dataclass(frozen=True)
class DerivedConeData:
    """The plane configuration (A_1..A_3, B_1..B_3, C) with A_j + B_j = C."""

    a: tuple[Vec2, Vec2, Vec2]
    b: tuple[Vec2, Vec2, Vec2]
    c: Vec2

    def __post_init__(self):
        for j in range(3):
            if vadd(self.a[j], self.b[j]) != self.c:
                raise ValueError(f"A_{j + 1} + B_{j + 1} != C")

    @property
    def is_integer(self) -> bool:
        entries = [x for v in (*self.a, *self.b, self.c) for x in v]
        return all(Fraction(x).denominator == 1 for x in entries)

    def generators(self) -> list[Vec2]:
        return [*self.a, *self.b]

    def to_json(self) -> dict:
        return {
            "A": [vec_to_json(v) for v in self.a],
            "B": [vec_to_json(v) for v in self.b],
            "C": vec_to_json(self.c),
        }


def cone_data(a_vectors, b_vectors) -> DerivedConeData:
    """Build cone data from A's and B's, requiring A_j + B_j constant."""
    a = tuple(vec2(*v) for v in a_vectors)
    b = tuple(vec2(*v) for v in b_vectors)
    if len(a) != 3 or len(b) != 3:
        raise ValueError("three A vectors and three B vectors required")
    c = vadd(a[0], b[0])
    for j in (1, 2):
        if vadd(a[j], b[j]) != c:
            raise ValueError("A_j + B_j must be independent of j")
    return DerivedConeData(a, b, c)


def derive(ws: WeightSystem) -> DerivedConeData:
    """Derived cone data A_j = w_j^L - w_1^R, B_j = -w_j^L + w_3^R."""
    w1r, w3r = ws.wr[0], ws.wr[2]
    a = tuple(vsub(wl, w1r) for wl in ws.wl)
    b = tuple(vsub(w3r, wl) for wl in ws.wl)
    c = vsub(w3r, w1r)
    return DerivedConeData(a, b, c)  # A_j + B_j = C re-asserted by the type


def positive_combination(c: Vec2, g1: Vec2, g2: Vec2) -> tuple[Fraction, Fraction] | None:
    """Exact (a, b) with a, b > 0 and a*g1 + b*g2 == c, or None.

    Unlike plain cone membership this demands strictly positive
    coefficients, so degenerate generator configurations need their own
    branches (parallel generators leave a 1-parameter family to pick from).
    """
    d = cross(g1, g2)
    if d != 0:
        a = Fraction(cross(c, g2)) / d
        b = Fraction(cross(g1, c)) / d
        return (a, b) if a > 0 and b > 0 else None
    g1_zero, g2_zero = is_zero(g1), is_zero(g2)
    if g1_zero and g2_zero:
        return (Fraction(1), Fraction(1)) if is_zero(c) else None
    if g1_zero or g2_zero:
        g = g2 if g1_zero else g1
        if cross(c, g) != 0:
            return None
        t = Fraction(dot(c, g)) / dot(g, g)
        if t <= 0:
            return None
        return (Fraction(1), t) if g1_zero else (t, Fraction(1))
    if cross(c, g1) != 0:
        return None
    s = Fraction(dot(c, g1)) / dot(g1, g1)  # c == s * g1
    t = Fraction(dot(g2, g1)) / dot(g1, g1)  # g2 == t * g1
    if t > 0:
        if s <= 0:
            return None
        return (s / 2, s / (2 * t))
    b = (abs(s) + 1) / abs(t)
    return (s + b * abs(t), b)


@dataclass(frozen=True)
class LevelSetConditions:
    """Level-set nonemptiness, regularity and compactness with witnesses."""

    nonempty: bool
    nonempty_witness: tuple[int, int, Fraction, Fraction] | None
    regular: bool
    compact: bool
    apex_functional: Vec2 | None

    @property
    def all_hold(self) -> bool:
        return self.nonempty and self.regular and self.compact

    def to_json(self) -> dict:
        witness = None
        if self.nonempty_witness is not None:
            i, j, a, b = self.nonempty_witness
            witness = {"i": i, "j": j, "a": scalar_to_json(a), "b": scalar_to_json(b)}
        return {
            "nonempty": self.nonempty,
            "nonempty_witness": witness,
            "regular": self.regular,
            "compact": self.compact,
            "apex_functional": None
            if self.apex_functional is None
            else vec_to_json(self.apex_functional),
        }


def check_level_set_conditions(d: DerivedConeData) -> LevelSetConditions:
    """Check the three level-set conditions directly (not via the cone test).

    nonempty: some C = a*A_i + b*B_j with i != j and a, b > 0;
    regular:  A_i, B_j linearly independent for all i != j;
    compact:  C outside cone(A_1,A_2,A_3) and cone(B_1,B_2,B_3), all six
              generators nonzero, and the cone of all six has an apex.
    """
    witness = None
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            ab = positive_combination(d.c, d.a[i], d.b[j])
            if ab is not None:
                witness = (i + 1, j + 1, ab[0], ab[1])
                break
        if witness is not None:
            break

    regular = all(
        cross(d.a[i], d.b[j]) != 0 for i in range(3) for j in range(3) if i != j
    )

    gens = d.generators()
    if any(is_zero(g) for g in gens):
        compact, apex = False, None
    else:
        apex = find_apex_functional(gens)
        compact = (
            apex is not None
            and not in_cone_many(d.c, list(d.a)).member
            and not in_cone_many(d.c, list(d.b)).member
        )
    return LevelSetConditions(witness is not None, witness, regular, compact, apex)


@dataclass(frozen=True)
class ConditionReport:
    """Full evidence for the separating cone condition.

    ``a_pairs``/``b_pairs``/``mixed_pairs`` map 1-based index pairs (i, j)
    to exact membership results for C against cone(A_i, A_j),
    cone(B_i, B_j) and cone(A_i, B_j); the mixed clause is checked for all
    nine pairs including i == j.
    """

    holds: bool
    a_pairs: dict[tuple[int, int], ConeMembership]
    b_pairs: dict[tuple[int, int], ConeMembership]
    mixed_pairs: dict[tuple[int, int], ConeMembership]
    level_set: LevelSetConditions

    def to_json(self) -> dict:
        def table(pairs):
            return {f"{i},{j}": m.to_json() for (i, j), m in sorted(pairs.items())}

        return {
            "holds": self.holds,
            "A_pairs": table(self.a_pairs),
            "B_pairs": table(self.b_pairs),
            "mixed_pairs": table(self.mixed_pairs),
            "level_set": self.level_set.to_json(),
        }


def check_cone_condition(d: DerivedConeData) -> ConditionReport:
    """Evaluate the separating cone condition with all 27 sub-results."""
    a_pairs: dict[tuple[int, int], ConeMembership] = {}
    b_pairs: dict[tuple[int, int], ConeMembership] = {}
    mixed: dict[tuple[int, int], ConeMembership] = {}
    for i in range(3):
        for j in range(3):
            a_pairs[(i + 1, j + 1)] = in_cone2(d.c, d.a[i], d.a[j])
            b_pairs[(i + 1, j + 1)] = in_cone2(d.c, d.b[i], d.b[j])
            mixed[(i + 1, j + 1)] = in_cone2(d.c, d.a[i], d.b[j])
    holds = (
        all(not m.member for m in a_pairs.values())
        and all(not m.member for m in b_pairs.values())
        and all(m.member for m in mixed.values())
    )
    return ConditionReport(holds, a_pairs, b_pairs, mixed, check_level_set_conditions(d))


def cone_condition_holds(d: DerivedConeData) -> bool:
    """Early-exit version of :func:`check_cone_condition` (same predicate)."""
    return _condition_holds_raw(*d.a, *d.b, d.c)


def _condition_holds_raw(a1, a2, a3, b1, b2, b3, c) -> bool:
    aa = (a1, a2, a3)
    bb = (b1, b2, b3)
    for i in range(3):
        for j in range(i, 3):  # pair cones are symmetric in (i, j)
            if in_cone2(c, aa[i], aa[j]).member:
                return False
            if in_cone2(c, bb[i], bb[j]).member:
                return False
    for i in range(3):
        for j in range(3):
            if not in_cone2(c, aa[i], bb[j]).member:
                return False
    return True


@dataclass(frozen=True)
class WeightSolution:
    """Rational weight system solving the derivation equations, plus the
    minimal integer rescaling."""

    wl_rational: tuple[Vec2, Vec2, Vec2]
    wr_rational: tuple[Vec2, Vec2, Vec2]
    scale: int
    system: WeightSystem

    def to_json(self) -> dict:
        return {
            "rational": {
                "wL": [vec_to_json(v) for v in self.wl_rational],
                "wR": [vec_to_json(v) for v in self.wr_rational],
            },
            "scale": self.scale,
            "integer": self.system.to_json(),
        }


def weights_from_cone_data(a_vectors, b_vectors) -> WeightSolution:
    """Solve A_j = w_j^L - w_1^R, B_j = -w_j^L + w_3^R for the weights.

    The linear system is underdetermined; the zero-sum constraints fix the
    particular solution

        w_j^L = A_j - S_A/3,  w_1^R = -S_A/3,
        w_2^R = S_A/3 - S_B/3,  w_3^R = S_B/3,

    with S_A, S_B the coordinate sums. The returned scale is the least
    positive integer clearing every denominator, and the integer system
    derives back to scale * (A, B, C) exactly.
    """
    d = cone_data(a_vectors, b_vectors)
    third = Fraction(1, 3)
    sa = vadd(vadd(d.a[0], d.a[1]), d.a[2])
    sb = vadd(vadd(d.b[0], d.b[1]), d.b[2])
    sa3 = vscale(third, sa)
    sb3 = vscale(third, sb)
    wl = tuple(vsub(aj, sa3) for aj in d.a)
    wr = (vscale(-1, sa3), vsub(sa3, sb3), sb3)
    denominators = [Fraction(x).denominator for v in (*wl, *wr) for x in v]
    scale = lcm(*denominators)

    def rescaled(v: Vec2) -> IVec2:
        return (int(scale * Fraction(v[0])), int(scale * Fraction(v[1])))

    system = WeightSystem(tuple(rescaled(v) for v in wl), tuple(rescaled(v) for v in wr))
    return WeightSolution(wl, wr, scale, system)


@dataclass(frozen=True)
class InterpolationSpec:
    """Base coefficients C = a*A_1 + b*B_1 (both > 0) and sample times."""

    a: Fraction
    b: Fraction
    times: tuple[Fraction, ...]

    def __post_init__(self):
        if self.a <= 0 or self.b <= 0:
            raise ValueError("base coefficients must be strictly positive")
        for t in self.times:
            if not 0 <= t <= 1:
                raise ValueError(f"sample time {t} outside [0, 1]")


def default_interpolation_times(steps: int = 8) -> tuple[Fraction, ...]:
    return tuple(Fraction(k, steps) for k in range(steps + 1))


def interpolation_spec(d: DerivedConeData, times=None) -> InterpolationSpec:
    """Interpolation data for d; requires C interior to cone(A_1, B_1)."""
    m = in_cone2(d.c, d.a[0], d.b[0])
    if m.status is not MembershipStatus.INTERIOR:
        raise ValueError("C must lie in the interior of cone(A_1, B_1)")
    assert m.coefficients is not None
    ts = default_interpolation_times() if times is None else tuple(Fraction(t) for t in times)
    return InterpolationSpec(m.coefficients[0], m.coefficients[1], ts)


def _primitive_direction(v: Vec2) -> Vec2:
    """Integer vector on the same ray; cone tests only see directions."""
    fx, fy = Fraction(v[0]), Fraction(v[1])
    m = lcm(fx.denominator, fy.denominator)
    x, y = int(fx * m), int(fy * m)
    g = gcd(x, y)
    return (x // g, y // g) if g > 1 else (x, y)


def check_interpolation_path(d: DerivedConeData, spec: InterpolationSpec) -> bool:
    """Whether the straight-line deformation toward the round configuration
    keeps the separating cone condition at every sample time.

    At time t the generators are A_j(t) = t*A_j + (1-t)*a*A_1 and
    B_j(t) = t*B_j + (1-t)*b*B_1 while C stays fixed; t = 1 restores the
    input and t = 0 collapses each family onto a single ray.
    """
    a0 = vscale(spec.a, d.a[0])
    b0 = vscale(spec.b, d.b[0])
    for t in spec.times:
        s = 1 - t
        at = [_primitive_direction(vadd(vscale(t, aj), vscale(s, a0))) for aj in d.a]
        bt = [_primitive_direction(vadd(vscale(t, bj), vscale(s, b0))) for bj in d.b]
        if not _condition_holds_raw(*at, *bt, d.c):
            return False
    return True


def enumerate_admissible_systems(
    bound: int, part: tuple[int, int] | None = None
) -> Iterator[WeightSystem]:
    """All weight systems with entries in [-bound, bound] passing the cone
    condition, in lexicographic order of the flattened (wL, wR) tuple.

    ``part=(k, n)`` yields the k-th of n deterministic slices (split over
    the outer wL blocks); merging and sorting the slices reproduces the
    full stream, so the enumeration parallelizes over processes.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if part is not None:
        k, n = part
        if not (n >= 1 and 0 <= k < n):
            raise ValueError(f"invalid partition {part!r}")
    rng = range(-bound, bound + 1)
    block_id = -1
    for x1, y1, x2, y2 in itertools.product(rng, rng, rng, rng):
        x3, y3 = -x1 - x2, -y1 - y2
        if abs(x3) > bound or abs(y3) > bound:
            continue
        block_id += 1
        if part is not None and block_id % part[1] != part[0]:
            continue
        for u1, v1, u2, v2 in itertools.product(rng, rng, rng, rng):
            u3, v3 = -u1 - u2, -v1 - v2
            if abs(u3) > bound or abs(v3) > bound:
                continue
            a1 = (x1 - u1, y1 - v1)
            a2 = (x2 - u1, y2 - v1)
            a3 = (x3 - u1, y3 - v1)
            b1 = (u3 - x1, v3 - y1)
            b2 = (u3 - x2, v3 - y2)
            b3 = (u3 - x3, v3 - y3)
            c = (u3 - u1, v3 - v1)
            if _condition_holds_raw(a1, a2, a3, b1, b2, b3, c):
                yield WeightSystem(
                    ((x1, y1), (x2, y2), (x3, y3)),
                    ((u1, v1), (u2, v2), (u3, v3)),
                )
