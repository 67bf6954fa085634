"""Exact rational geometry for plane cones and small integer lattices.

Everything here is exact: scalars are Python ints or `fractions.Fraction`,
vectors are plain ``(x, y)`` tuples, and predicates are decided by sign
tests on cross products. Floats are rejected on input. Cone membership on
a boundary ray must be *decided*, not approximated, because the downstream
condition checks distinguish strict from non-strict membership.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Scalar",
    "Vec2",
    "MembershipStatus",
    "ConeMembership",
    "vec2",
    "cross",
    "dot",
    "vadd",
    "vsub",
    "vscale",
    "is_zero",
    "scalar_to_json",
    "vec_to_json",
    "in_cone2",
    "in_cone_many",
    "find_apex_functional",
    "is_unimodular_pair",
    "smith_invariant_factors",
]

Scalar = int | Fraction
Vec2 = tuple[Scalar, Scalar]


def _scalar(x) -> Scalar:
    if isinstance(x, (int, Fraction)):
        return x
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"exact rational expected, got {type(x).__name__}: {x!r}")


def vec2(x, y) -> Vec2:
    """Build an exact vector, accepting ints, Fractions or 'p/q' strings."""
    return (_scalar(x), _scalar(y))


def cross(u: Vec2, v: Vec2) -> Scalar:
    return u[0] * v[1] - u[1] * v[0]


def dot(u: Vec2, v: Vec2) -> Scalar:
    return u[0] * v[0] + u[1] * v[1]


def vadd(u: Vec2, v: Vec2) -> Vec2:
    return (u[0] + v[0], u[1] + v[1])


def vsub(u: Vec2, v: Vec2) -> Vec2:
    return (u[0] - v[0], u[1] - v[1])


def vscale(s: Scalar, u: Vec2) -> Vec2:
    return (s * u[0], s * u[1])


def is_zero(u: Vec2) -> bool:
    return u[0] == 0 and u[1] == 0


def scalar_to_json(s: Scalar) -> str:
    return str(Fraction(s))


def vec_to_json(u: Vec2) -> list[str]:
    return [scalar_to_json(u[0]), scalar_to_json(u[1])]


def _div(p: Scalar, q: Scalar) -> Fraction:
    return Fraction(p) / Fraction(q)


class MembershipStatus(enum.Enum):
    OUTSIDE = "outside"
    ON_BOUNDARY_RAY = "boundary"
    INTERIOR = "interior"


@dataclass(frozen=True)
class ConeMembership:
    """Decision for ``c in cone(g1, g2)`` with an exact witness.

    When the point is a member, ``coefficients`` are nonnegative rationals
    with ``lam1*g1 + lam2*g2 == c`` exactly. ``INTERIOR`` means both
    coefficients are strictly positive and the generators are linearly
    independent; with dependent generators the best status is
    ``ON_BOUNDARY_RAY``. ``pair`` carries generator indices for
    multi-generator queries.
    """

    status: MembershipStatus
    coefficients: tuple[Fraction, Fraction] | None = None
    pair: tuple[int, int] | None = None

    @property
    def member(self) -> bool:
        return self.status is not MembershipStatus.OUTSIDE

    def to_json(self) -> dict:
        out: dict = {"status": self.status.value}
        if self.coefficients is not None:
            out["coefficients"] = [scalar_to_json(c) for c in self.coefficients]
        if self.pair is not None:
            out["pair"] = list(self.pair)
        return out


_OUTSIDE = ConeMembership(MembershipStatus.OUTSIDE)
_F0 = Fraction(0)


def _ray_coefficient(c: Vec2, g: Vec2) -> Fraction | None:
    """Exact t with c == t*g, or None when c is off the line of g (g != 0)."""
    if cross(c, g) != 0:
        return None
    return _div(dot(c, g), dot(g, g))


def in_cone2(c: Vec2, g1: Vec2, g2: Vec2) -> ConeMembership:
    """Decide whether ``c`` lies in ``{l1*g1 + l2*g2 : l1, l2 >= 0}``.

    Total on degenerate input: zero or parallel generators reduce to ray,
    line or origin membership.
    """
    d = cross(g1, g2)
    if d != 0:
        n1 = cross(c, g2)  # lam1 = n1 / d
        n2 = cross(g1, c)  # lam2 = n2 / d
        if d > 0:
            inside = n1 >= 0 and n2 >= 0
            strict = n1 > 0 and n2 > 0
        else:
            inside = n1 <= 0 and n2 <= 0
            strict = n1 < 0 and n2 < 0
        if not inside:
            return _OUTSIDE
        status = MembershipStatus.INTERIOR if strict else MembershipStatus.ON_BOUNDARY_RAY
        return ConeMembership(status, (_div(n1, d), _div(n2, d)))

    g1_zero = is_zero(g1)
    g2_zero = is_zero(g2)
    if g1_zero and g2_zero:
        if is_zero(c):
            return ConeMembership(MembershipStatus.ON_BOUNDARY_RAY, (_F0, _F0))
        return _OUTSIDE
    if g2_zero:
        t = _ray_coefficient(c, g1)
        if t is None or t < 0:
            return _OUTSIDE
        return ConeMembership(MembershipStatus.ON_BOUNDARY_RAY, (t, _F0))
    if g1_zero:
        t = _ray_coefficient(c, g2)
        if t is None or t < 0:
            return _OUTSIDE
        return ConeMembership(MembershipStatus.ON_BOUNDARY_RAY, (_F0, t))

    # parallel nonzero generators: a ray when aligned, the full line otherwise
    t = _ray_coefficient(c, g1)
    if t is None:
        return _OUTSIDE
    if t >= 0:
        return ConeMembership(MembershipStatus.ON_BOUNDARY_RAY, (t, _F0))
    if dot(g1, g2) < 0:
        u = _ray_coefficient(c, g2)
        assert u is not None and u > 0
        return ConeMembership(MembershipStatus.ON_BOUNDARY_RAY, (_F0, u))
    return _OUTSIDE


_RANK = {
    MembershipStatus.OUTSIDE: 0,
    MembershipStatus.ON_BOUNDARY_RAY: 1,
    MembershipStatus.INTERIOR: 2,
}


def in_cone_many(c: Vec2, gens: list[Vec2]) -> ConeMembership:
    """Membership of ``c`` in the cone spanned by any number of generators.

    In the plane it suffices to scan generator pairs and single rays; the
    returned witness coefficients refer to the generators named in
    ``pair`` (zero generators are skipped, they do not enlarge the cone).
    """
    if not gens:
        raise ValueError("at least one generator required")
    live = [i for i, g in enumerate(gens) if not is_zero(g)]
    if not live:
        if is_zero(c):
            return ConeMembership(MembershipStatus.ON_BOUNDARY_RAY, (_F0, _F0), (0, 0))
        return _OUTSIDE
    best: ConeMembership | None = None
    for a in range(len(live)):
        for b in range(a, len(live)):
            i, j = live[a], live[b]
            m = in_cone2(c, gens[i], gens[j])
            if m.status is MembershipStatus.INTERIOR:
                return ConeMembership(m.status, m.coefficients, (i, j))
            if m.member and best is None:
                best = ConeMembership(m.status, m.coefficients, (i, j))
    return best if best is not None else _OUTSIDE


def find_apex_functional(gens: list[Vec2]) -> Vec2 | None:
    """A covector strictly positive on every generator, if one exists.

    Existence is equivalent to all generators lying in an open half-plane
    (the cone has apex 0). Construction: find a pair of generators whose
    cone contains all the others and return the sum of the dual basis of
    that pair; if all generators share a single ray, the ray direction
    itself works.
    """
    if not gens:
        raise ValueError("at least one generator required")
    for g in gens:
        if is_zero(g):
            raise ValueError("zero generator has no strictly positive functional")
    n = len(gens)
    for i in range(n):
        for j in range(i + 1, n):
            d = cross(gens[i], gens[j])
            if d == 0:
                continue
            if all(in_cone2(g, gens[i], gens[j]).member for g in gens):
                gi, gj = gens[i], gens[j]
                # dual basis: u(gi)=1, u(gj)=0 and v(gi)=0, v(gj)=1
                alpha = (_div(gj[1] - gi[1], d), _div(gi[0] - gj[0], d))
                return alpha
    g0 = gens[0]
    if all(cross(g0, g) == 0 and dot(g0, g) > 0 for g in gens):
        return (Fraction(g0[0]), Fraction(g0[1]))
    return None


def _as_int(x) -> int:
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    raise ValueError(f"integer entry expected, got {x!r}")


def is_unimodular_pair(a: Vec2, b: Vec2) -> bool:
    """Whether two integer vectors form a basis of the integer lattice."""
    ax, ay = _as_int(a[0]), _as_int(a[1])
    bx, by = _as_int(b[0]), _as_int(b[1])
    return abs(ax * by - ay * bx) == 1


def smith_invariant_factors(rows) -> tuple[int, tuple[int, ...]]:
    """Rank and invariant factors of an integer matrix with two columns.

    Returns ``(rank, (d1, ..., d_rank))`` with the divisibility chain
    d1 | d2, computed by unimodular row/column elimination.
    """
    mat = [[_as_int(x) for x in row] for row in rows]
    if not mat or any(len(row) != 2 for row in mat):
        raise ValueError("a k x 2 matrix with k >= 1 is required")
    k = len(mat)
    diag: list[int] = []
    r = 0
    while r < 2:
        pivot = None
        for i in range(r, k):
            for j in range(r, 2):
                if mat[i][j] != 0 and (pivot is None or abs(mat[i][j]) < abs(mat[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i0, j0 = pivot
        mat[r], mat[i0] = mat[i0], mat[r]
        if j0 != r:
            for row in mat:
                row[r], row[j0] = row[j0], row[r]
        while True:
            clean = True
            for i in range(r + 1, k):
                if mat[i][r] != 0:
                    q = mat[i][r] // mat[r][r]
                    for j in range(r, 2):
                        mat[i][j] -= q * mat[r][j]
                    if mat[i][r] != 0:  # remainder smaller than pivot: swap and retry
                        mat[r], mat[i] = mat[i], mat[r]
                        clean = False
            for j in range(r + 1, 2):
                if mat[r][j] != 0:
                    q = mat[r][j] // mat[r][r]
                    for i in range(r, k):
                        mat[i][j] -= q * mat[i][r]
                    if mat[r][j] != 0:
                        for i in range(k):
                            mat[i][r], mat[i][j] = mat[i][j], mat[i][r]
                        clean = False
            if clean:
                # pivot must divide the remaining submatrix for the chain
                fix = None
                for i in range(r + 1, k):
                    for j in range(r + 1, 2):
                        if mat[i][j] % mat[r][r] != 0:
                            fix = i
                            break
                    if fix is not None:
                        break
                if fix is None:
                    break
                for j in range(r, 2):
                    mat[r][j] += mat[fix][j]
        diag.append(abs(mat[r][r]))
        r += 1
    rank = len(diag)
    for a, b in zip(diag, diag[1:]):
        assert b % a == 0, "invariant factor chain broken"
    return rank, tuple(diag)
