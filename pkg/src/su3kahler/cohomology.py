"""Finite-dimensional algebra models for the basic cohomology tables.

The basic cohomology ring of the construction has graded dimensions
(1, 2, 2, 1) in degrees 0, 2, 4, 6. We realize it concretely as the
coinvariant algebra Q[x1, x2, x3]/(e1, e2, e3) with deg x_i = 2 (the
cohomology of the full flag variety of rank two), which carries a hard
Lefschetz class; eliminating x3 = -x1 - x2 leaves the monomial basis
{1; x1, x2; x1^2, x1*x2; x1^2*x2}.

Tensoring with an exterior algebra on two degree-1 generators and sending
them to a basis of degree 2 produces a model whose cohomology is that of
the group itself, an exterior algebra on generators of degrees 3 and 5.
The bigraded variant places x_i in bidegree (1, 1), adds generators of
bidegrees (1, 0) and (0, 1), and sends the first to a class beta in the
(1, 1) part. Which of the two possible Hodge-number branches appears is
decided by the rank of multiplication by beta from bidegree (1, 1) to
(2, 2), whose determinant is the anisotropic form b1^2 - b1*b2 + b2^2;
hitting the degenerate branch therefore requires scalars with a primitive
cube root of unity adjoined, implemented exactly by :class:`Eisenstein`.

All linear algebra is exact (Gaussian elimination over the scalar field).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Eisenstein",
    "OMEGA",
    "exact_rank",
    "GradedAlgebra",
    "basic_model",
    "DGAModel",
    "build_derham_model",
    "cohomology_of_complex",
    "dga_cohomology",
    "HodgeTable",
    "hodge_model",
    "GENERIC_BETA",
    "DEGENERATE_BETA",
    "BASIC_BETTI",
    "SU3_DERHAM_BETTI",
]

BASIC_BETTI = (1, 0, 2, 0, 2, 0, 1)
SU3_DERHAM_BETTI = (1, 0, 0, 1, 0, 1, 0, 0, 1)


@dataclass(frozen=True)
class Eisenstein:
    """Exact element a + b*omega of Q(omega), omega a primitive cube root
    of unity (omega^2 = -1 - omega)."""

    a: Fraction
    b: Fraction

    @staticmethod
    def of(x) -> "Eisenstein":
        if isinstance(x, Eisenstein):
            return x
        return Eisenstein(Fraction(x), Fraction(0))

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __add__(self, other):
        o = Eisenstein.of(other)
        return Eisenstein(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return Eisenstein(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-Eisenstein.of(other))

    def __rsub__(self, other):
        return Eisenstein.of(other) + (-self)

    def __mul__(self, other):
        o = Eisenstein.of(other)
        return Eisenstein(
            self.a * o.a - self.b * o.b,
            self.a * o.b + self.b * o.a - self.b * o.b,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = Eisenstein.of(other)
        norm = o.a * o.a - o.a * o.b + o.b * o.b
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(omega)")
        conj = Eisenstein(o.a - o.b, -o.b)
        num = self * conj
        return Eisenstein(num.a / norm, num.b / norm)

    def __eq__(self, other):
        o = Eisenstein.of(other)
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"({self.a}+{self.b}w)"


OMEGA = Eisenstein(Fraction(0), Fraction(1))


def exact_rank(rows: list[list]) -> int:
    """Rank by fraction-free-ish Gaussian elimination over any exact field
    (entries need +, -, *, / and truthiness)."""
    mat = [row[:] for row in rows]
    if not mat or not mat[0]:
        return 0
    nrows, ncols = len(mat), len(mat[0])
    rank = 0
    col = 0
    while rank < nrows and col < ncols:
        pivot = next((r for r in range(rank, nrows) if mat[r][col]), None)
        if pivot is None:
            col += 1
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        prow = mat[rank]
        for r in range(rank + 1, nrows):
            if mat[r][col]:
                factor = mat[r][col] / prow[col]
                mat[r] = [mat[r][j] - factor * prow[j] for j in range(ncols)]
        rank += 1
        col += 1
    return rank


def _matmul(a: list[list], b: list[list]) -> list[list]:
    if not a or not b:
        return []
    return [
        [sum((a[i][k] * b[k][j] for k in range(len(b))), Fraction(0)) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


@dataclass(frozen=True)
class GradedAlgebra:
    """Graded-commutative algebra given by basis labels and an exact
    multiplication table. Products landing above ``top`` vanish."""

    basis: dict[int, tuple[str, ...]]
    products: dict[tuple[int, int, int, int], tuple[Fraction, ...]]
    top: int
    lefschetz: tuple[Fraction, ...] | None = None  # class in degree 2

    def dim(self, deg: int) -> int:
        return len(self.basis.get(deg, ()))

    @property
    def degrees(self) -> list[int]:
        return sorted(self.basis)

    def mul_basis(self, d1: int, i1: int, d2: int, i2: int) -> tuple[Fraction, ...]:
        target = d1 + d2
        if target > self.top:
            return ()
        if d1 == 0:  # unit in degree 0
            return tuple(
                Fraction(1) if k == i2 else Fraction(0) for k in range(self.dim(d2))
            )
        if d2 == 0:
            return tuple(
                Fraction(1) if k == i1 else Fraction(0) for k in range(self.dim(d1))
            )
        key = (d1, i1, d2, i2) if (d1, i1) <= (d2, i2) else (d2, i2, d1, i1)
        return self.products[key]

    def mul_class(self, d1: int, v1, d2: int, v2):
        """Product of two coefficient vectors; scalars may extend Q."""
        target = d1 + d2
        n = self.dim(target)
        zero = 0 * (list(v1) + list(v2) + [Fraction(0)])[0]
        out = [zero for _ in range(n)]
        for i1, c1 in enumerate(v1):
            if not c1:
                continue
            for i2, c2 in enumerate(v2):
                if not c2:
                    continue
                for k, s in enumerate(self.mul_basis(d1, i1, d2, i2)):
                    if s:
                        out[k] = out[k] + c1 * c2 * s
        return tuple(out)

    def check_multiplication(self) -> None:
        """Exhaustive unit, commutativity and associativity checks."""
        if self.basis.get(0, ()) == ():
            raise ValueError("missing unit degree")
        elems = [(d, i) for d in self.degrees for i in range(self.dim(d))]
        for (d1, i1), (d2, i2) in itertools.product(elems, repeat=2):
            left = self.mul_basis(d1, i1, d2, i2)
            right = self.mul_basis(d2, i2, d1, i1)
            if left != right:  # all nonzero degrees here are even
                raise ValueError(f"commutativity fails at {(d1, i1, d2, i2)}")
        for (d1, i1), (d2, i2), (d3, i3) in itertools.product(elems, repeat=3):
            e2 = [Fraction(1) if k == i2 else Fraction(0) for k in range(self.dim(d2))]
            e3 = [Fraction(1) if k == i3 else Fraction(0) for k in range(self.dim(d3))]
            ab = self.mul_basis(d1, i1, d2, i2)
            bc = self.mul_basis(d2, i2, d3, i3)
            left = self.mul_class(d1 + d2, ab, d3, e3)
            e1 = [Fraction(1) if k == i1 else Fraction(0) for k in range(self.dim(d1))]
            right = self.mul_class(d1, e1, d2 + d3, bc)
            if tuple(left) != tuple(right):
                raise ValueError(f"associativity fails at {(d1, i1, d2, i2, d3, i3)}")


def basic_model() -> GradedAlgebra:
    """The coinvariant algebra of the rank-two symmetric group action.

    Relations after eliminating x3: x2^2 = -x1^2 - x1*x2, x1^3 = 0 and
    x1*x2^2 = -x1^2*x2. Graded dimensions (1, 2, 2, 1) in degrees
    0, 2, 4, 6. The distinguished Lefschetz class is x1 - x3 = 2*x1 + x2.
    """
    F = Fraction
    basis = {
        0: ("1",),
        2: ("x1", "x2"),
        4: ("x1^2", "x1*x2"),
        6: ("x1^2*x2",),
    }
    products = {
        (2, 0, 2, 0): (F(1), F(0)),
        (2, 0, 2, 1): (F(0), F(1)),
        (2, 1, 2, 1): (F(-1), F(-1)),
        (2, 0, 4, 0): (F(0),),
        (2, 0, 4, 1): (F(1),),
        (2, 1, 4, 0): (F(1),),
        (2, 1, 4, 1): (F(-1),),
        (2, 0, 6, 0): (),
        (2, 1, 6, 0): (),
        (4, 0, 4, 0): (),
        (4, 0, 4, 1): (),
        (4, 1, 4, 1): (),
        (4, 0, 6, 0): (),
        (4, 1, 6, 0): (),
        (6, 0, 6, 0): (),
    }
    return GradedAlgebra(basis, products, top=6, lefschetz=(F(2), F(1)))


@dataclass(frozen=True)
class DGAModel:
    """The graded algebra tensored with an exterior algebra on two
    degree-1 generators, with the differential determined by their images
    in degree 2 (the differential vanishes on the algebra itself)."""

    algebra: GradedAlgebra
    gen_labels: tuple[str, str]
    d_gens: tuple[tuple[Fraction, ...], tuple[Fraction, ...]]

    def __post_init__(self):
        for img in self.d_gens:
            if len(img) != self.algebra.dim(2):
                raise ValueError("generator images must live in degree 2")


def build_derham_model(dw1=(1, 0), dw2=(0, 1)) -> DGAModel:
    algebra = basic_model()
    img1 = tuple(Fraction(c) for c in dw1)
    img2 = tuple(Fraction(c) for c in dw2)
    return DGAModel(algebra, ("w1", "w2"), (img1, img2))


def cohomology_of_complex(dims: list[int], mats: list[list[list]]) -> tuple[int, ...]:
    """Betti numbers of a cochain complex given by exact matrices.

    ``mats[n]`` is the matrix of d_n : C^n -> C^{n+1} (rows indexed by
    C^{n+1}); consecutive composites are verified to vanish.
    """
    if len(mats) != len(dims) - 1:
        raise ValueError("need one matrix per consecutive pair of degrees")
    for n, mat in enumerate(mats):
        if len(mat) != dims[n + 1] or any(len(row) != dims[n] for row in mat):
            raise ValueError(f"matrix {n} has the wrong shape")
    for n in range(len(mats) - 1):
        if dims[n] and dims[n + 2]:
            comp = _matmul(mats[n + 1], mats[n])
            if any(any(entry for entry in row) for row in comp):
                raise ValueError(f"d o d != 0 between degrees {n} and {n + 2}")
    ranks = [exact_rank(mat) if dims[n] and dims[n + 1] else 0 for n, mat in enumerate(mats)]
    betti = []
    for n, dim in enumerate(dims):
        rank_out = ranks[n] if n < len(ranks) else 0
        rank_in = ranks[n - 1] if n >= 1 else 0
        betti.append(dim - rank_out - rank_in)
    return tuple(betti)


# Exterior subsets in a fixed order; the pair (0, 1) maps by the Leibniz
# rule to +(d gen0) tensor gen1 - (d gen1) tensor gen0.
_SUBSETS = ((), (0,), (1,), (0, 1))


def _dga_basis(model: DGAModel) -> dict[int, list[tuple[int, int, tuple[int, ...]]]]:
    algebra = model.algebra
    out: dict[int, list[tuple[int, int, tuple[int, ...]]]] = {}
    for deg in algebra.degrees:
        for idx in range(algebra.dim(deg)):
            for s in _SUBSETS:
                out.setdefault(deg + len(s), []).append((deg, idx, s))
    return out


def dga_cohomology(model: DGAModel) -> tuple[int, ...]:
    """Betti numbers of the model, exact over Q."""
    algebra = model.algebra
    basis = _dga_basis(model)
    top = max(basis)
    dims = [len(basis.get(n, [])) for n in range(top + 1)]
    index = {
        n: {elem: k for k, elem in enumerate(basis.get(n, []))} for n in range(top + 1)
    }

    def d_elem(deg: int, idx: int, s: tuple[int, ...]):
        unit = [Fraction(1) if k == idx else Fraction(0) for k in range(algebra.dim(deg))]
        if s == ():
            return []
        if len(s) == 1:
            img = algebra.mul_class(deg, unit, 2, model.d_gens[s[0]])
            return [((deg + 2, k, ()), c) for k, c in enumerate(img) if c]
        img0 = algebra.mul_class(deg, unit, 2, model.d_gens[0])
        img1 = algebra.mul_class(deg, unit, 2, model.d_gens[1])
        out = [((deg + 2, k, (1,)), c) for k, c in enumerate(img0) if c]
        out += [((deg + 2, k, (0,)), -c) for k, c in enumerate(img1) if c]
        return out

    mats = []
    for n in range(top):
        mat = [[Fraction(0)] * dims[n] for _ in range(dims[n + 1])]
        for col, (deg, idx, s) in enumerate(basis.get(n, [])):
            for target, coeff in d_elem(deg, idx, s):
                mat[index[n + 1][target]][col] += coeff
        mats.append(mat)
    return cohomology_of_complex(dims, mats)


GENERIC_BETA = (Fraction(1), Fraction(0))
DEGENERATE_BETA = (Eisenstein(Fraction(0), Fraction(-1)), Eisenstein(Fraction(1), Fraction(0)))

# Entries of the Hodge diamond that do not depend on beta.
_FIXED_HODGE = {
    (0, 0): 1,
    (0, 1): 1,
    (1, 1): 1,
    (1, 2): 1,
    (3, 2): 1,
    (3, 3): 1,
    (4, 3): 1,
    (4, 4): 1,
}


@dataclass(frozen=True)
class HodgeTable:
    entries: dict[tuple[int, int], int]

    @property
    def branch(self) -> tuple[int, int, int]:
        return (self.entries[(2, 1)], self.entries[(2, 2)], self.entries[(2, 3)])

    def diamond(self) -> list[list[int]]:
        rows = []
        for r in range(9):
            row = [
                self.entries.get((p, r - p), 0)
                for p in range(min(r, 4), max(0, r - 4) - 1, -1)
            ]
            rows.append(row)
        return rows

    def to_json(self) -> dict:
        return {"diamond": self.diamond(), "branch": list(self.branch)}


def hodge_model(beta) -> HodgeTable:
    """Hodge numbers of the bigraded model with d(u) = beta.

    ``beta`` is a pair of scalars (rationals or :class:`Eisenstein`)
    expressing the image of the (1, 0) generator in the (1, 1) part over
    the basis (x1, x2); the (0, 1) generator is closed. The entries away
    from (2, 1), (2, 2), (2, 3) are checked against their forced values;
    the branch is (0, 0, 0) when multiplication by beta has full rank and
    (1, 2, 1) on the degeneracy conic.
    """
    b = (Eisenstein.of(beta[0]), Eisenstein.of(beta[1]))
    if not (b[0] or b[1]):
        raise ValueError("beta must be nonzero")
    algebra = basic_model()
    zero = Eisenstein.of(0)

    # Basis elements (alg_deg, idx, s) with s subset of {u, v}; the
    # bidegree is (alg_deg/2 + [u in s], alg_deg/2 + [v in s]).
    def bidegree(deg: int, s: tuple[int, ...]) -> tuple[int, int]:
        return (deg // 2 + (1 if 0 in s else 0), deg // 2 + (1 if 1 in s else 0))

    basis: dict[tuple[int, int], list[tuple[int, int, tuple[int, ...]]]] = {}
    for deg in algebra.degrees:
        for idx in range(algebra.dim(deg)):
            for s in _SUBSETS:
                basis.setdefault(bidegree(deg, s), []).append((deg, idx, s))
    index = {pq: {e: k for k, e in enumerate(elems)} for pq, elems in basis.items()}

    def dbar(deg: int, idx: int, s: tuple[int, ...]):
        if s == () or s == (1,):
            return []
        unit = [
            Eisenstein.of(1) if k == idx else zero for k in range(algebra.dim(deg))
        ]
        img = algebra.mul_class(deg, unit, 2, list(b))
        tail = () if s == (0,) else (1,)
        return [((deg + 2, k, tail), c) for k, c in enumerate(img) if c]

    mats: dict[tuple[int, int], list[list[Eisenstein]]] = {}
    for pq, elems in basis.items():
        target_pq = (pq[0], pq[1] + 1)
        target = basis.get(target_pq, [])
        mat = [[zero] * len(elems) for _ in range(len(target))]
        for col, elem in enumerate(elems):
            for image_elem, coeff in dbar(*elem):
                mat[index[target_pq][image_elem]][col] += coeff
        mats[pq] = mat

    entries: dict[tuple[int, int], int] = {}
    for pq, elems in basis.items():
        rank_out = exact_rank(mats[pq]) if mats[pq] else 0
        below = (pq[0], pq[1] - 1)
        rank_in = exact_rank(mats[below]) if basis.get(below) and mats[below] else 0
        entries[pq] = len(elems) - rank_out - rank_in

    for pq, expected in _FIXED_HODGE.items():
        if entries.get(pq, 0) != expected:
            raise RuntimeError(f"forced Hodge number h^{pq} came out {entries.get(pq, 0)}")
    for pq, value in entries.items():
        if pq not in _FIXED_HODGE and pq not in ((2, 1), (2, 2), (2, 3)) and value != 0:
            raise RuntimeError(f"unexpected nonzero Hodge number h^{pq} = {value}")
    return HodgeTable(entries)
