"""Floating-point model of the quadric in C^6 and pointwise certificates.

The ambient space is C^3 x C^3 with coordinates (z, w), carrying the
Kahler form

    omega(u, v) = sum_k Im(u_k * conj(v_k)),

oriented so that omega(J u, u) = |u|^2 > 0 for the complex structure
J = multiplication by i. The quadric is sum_j z_j w_j = 0 with z, w != 0,
and for cone data (A, B, C) the moment map is

    Phi(z, w) = sum_j A_j |z_j|^2 + B_j |w_j|^2.

Points of the level set Phi = C on the quadric are sampled exactly (one
coordinate per factor, from a positive cone witness), by Gauss-Newton
projection of perturbations, or by embedding special unitary matrices when
the data is the round normalization. :func:`certify_point` then checks the
linear-algebra content of the transverse Kahler construction at a point:
constraint regularity, transversality of the rotated frame, the induced
complex structure squaring to -1 and rotating the orbit directions, omega
compatibility, and positive semidefiniteness of omega(J_N -, -) with a
2-dimensional kernel along the orbit.

Everything here is float; all exact decisions live in the other modules.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .weights import DerivedConeData, cone_data, positive_combination

__all__ = [
    "ROUND_DATA",
    "Tolerances",
    "LevelSetPoint",
    "level_point",
    "check_special_unitary",
    "random_su3",
    "embed_su3",
    "moment_map",
    "sample_level_point",
    "project_to_level",
    "action_orbit_map",
    "equivariance_check",
    "transverse_frame",
    "PointCertificate",
    "certify_point",
    "certification_sample",
    "constraint_values",
    "constraint_jacobian",
    "omega_matrix",
    "ambient_complex_structure",
]

# Cone data of the round level set {sum |z|^2 = 1, sum |w|^2 = 1}.
ROUND_DATA = cone_data([(1, 0)] * 3, [(0, 1)] * 3)


@dataclass(frozen=True)
class Tolerances:
    """Numerical thresholds; all rank decisions are relative."""

    residual: float = 1e-9       # level-set membership
    zero: float = 1e-8           # |eigenvalue| treated as 0 in spectra
    pos: float = 1e-6            # smallest positive eigenvalue vs largest
    rank_rel: float = 1e-9       # singular value cutoff vs largest
    operator: float = 1e-8       # operator identity errors
    nonzero_floor: float = 1e-8  # max |z_j|, |w_j| must exceed this


@dataclass
class LevelSetPoint:
    z: np.ndarray  # shape (3,), complex
    w: np.ndarray  # shape (3,), complex
    residuals: tuple[float, float]  # (|sum z_j w_j|, |Phi - C|)

    def to_json(self) -> dict:
        fmt = lambda c: [float(c.real), float(c.imag)]
        return {
            "z": [fmt(c) for c in self.z],
            "w": [fmt(c) for c in self.w],
            "residuals": [float(r) for r in self.residuals],
        }


def _weight_arrays(d: DerivedConeData):
    """Float weight components: (af, ag) for z, (bf, bg) for w."""
    af = np.array([float(v[0]) for v in d.a])
    ag = np.array([float(v[1]) for v in d.a])
    bf = np.array([float(v[0]) for v in d.b])
    bg = np.array([float(v[1]) for v in d.b])
    return af, ag, bf, bg


def moment_map(d: DerivedConeData, p) -> np.ndarray:
    """Phi(z, w) = sum_j A_j |z_j|^2 + B_j |w_j|^2 as a float 2-vector."""
    z, w = _as_zw(p)
    af, ag, bf, bg = _weight_arrays(d)
    z2 = np.abs(z) ** 2
    w2 = np.abs(w) ** 2
    return np.array([af @ z2 + bf @ w2, ag @ z2 + bg @ w2])


def _as_zw(p) -> tuple[np.ndarray, np.ndarray]:
    if isinstance(p, LevelSetPoint):
        return p.z, p.w
    z, w = p
    return np.asarray(z, dtype=complex), np.asarray(w, dtype=complex)


def _residuals(d: DerivedConeData, z: np.ndarray, w: np.ndarray) -> tuple[float, float]:
    quad = abs(np.sum(z * w))
    c = np.array([float(d.c[0]), float(d.c[1])])
    mom = float(np.linalg.norm(moment_map(d, (z, w)) - c))
    return (float(quad), mom)


def level_point(
    d: DerivedConeData, z, w, tol: Tolerances = Tolerances()
) -> LevelSetPoint:
    """Validated construction: both factors nonzero, both residuals small."""
    z = np.asarray(z, dtype=complex).reshape(3)
    w = np.asarray(w, dtype=complex).reshape(3)
    if np.max(np.abs(z)) <= tol.nonzero_floor or np.max(np.abs(w)) <= tol.nonzero_floor:
        raise ValueError("z and w must both be nonzero on the quadric")
    res = _residuals(d, z, w)
    if res[0] > tol.residual or res[1] > tol.residual:
        raise ValueError(f"point misses the level set: residuals {res}")
    return LevelSetPoint(z, w, res)


def check_special_unitary(a: np.ndarray, tol: float = 1e-9) -> None:
    a = np.asarray(a, dtype=complex)
    if a.shape != (3, 3):
        raise ValueError("a 3x3 matrix is required")
    err = np.linalg.norm(a.conj().T @ a - np.eye(3))
    det_err = abs(np.linalg.det(a) - 1.0)
    if err > tol or det_err > tol:
        raise ValueError(f"not special unitary within {tol}: unitarity {err}, det {det_err}")


def random_su3(seed) -> np.ndarray:
    """Seeded Haar-like special unitary matrix (QR of a complex Gaussian,
    one column rephased to force determinant 1)."""
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    q, r = np.linalg.qr(g)
    diag = np.diagonal(r)
    if np.min(np.abs(diag)) < 1e-12:
        raise RuntimeError("singular Gaussian draw")
    q = q * (diag / np.abs(diag))  # fix column phases (R diagonal positive)
    det = np.linalg.det(q)
    q[:, 0] /= det
    return q


def embed_su3(a: np.ndarray, tol: float = 1e-9) -> LevelSetPoint:
    """Embed a special unitary matrix into the round level set.

    z is the first column of A and w the third column of the inverse
    transpose, which for unitary A is the entrywise conjugate, so
    sum |z|^2 = sum |w|^2 = 1 and sum z_j w_j = <col1, col3> = 0.
    """
    check_special_unitary(a, tol)
    a = np.asarray(a, dtype=complex)
    z = a[:, 0].copy()
    w = np.conj(a[:, 2])
    return level_point(ROUND_DATA, z, w, Tolerances(residual=max(tol, 1e-10)))


def equivariance_check(a: np.ndarray, g: np.ndarray, h: np.ndarray) -> float:
    """Residual between embedding g*A*h^{-1} and acting on the embedding.

    The action on coordinates multiplies z_k by g_k * h_1^{-1} and w_k by
    g_k^{-1} * h_3, for unit-modulus determinant-one diagonals g, h.
    """
    g = np.asarray(g, dtype=complex).reshape(3)
    h = np.asarray(h, dtype=complex).reshape(3)
    for diag in (g, h):
        if np.max(np.abs(np.abs(diag) - 1)) > 1e-9 or abs(np.prod(diag) - 1) > 1e-9:
            raise ValueError("torus elements must be unit-modulus with product 1")
    moved = embed_su3(np.diag(g) @ np.asarray(a, dtype=complex) @ np.diag(1 / h))
    base = embed_su3(a)
    z_expected = g * h[0].conjugate() * base.z
    w_expected = (1 / g) * h[2] * base.w
    return float(
        np.linalg.norm(moved.z - z_expected) + np.linalg.norm(moved.w - w_expected)
    )


def sample_level_point(d: DerivedConeData, i: int, j: int) -> LevelSetPoint:
    """The exact level-set point supported on z_i and w_j (1-based, i != j).

    Requires C = a*A_i + b*B_j with a, b > 0; then z_i = sqrt(a),
    w_j = sqrt(b) satisfies both constraints with one term each.
    """
    if i == j or not (1 <= i <= 3 and 1 <= j <= 3):
        raise ValueError("indices must be distinct elements of {1, 2, 3}")
    ab = positive_combination(d.c, d.a[i - 1], d.b[j - 1])
    if ab is None:
        raise ValueError(
            f"C admits no positive combination of A_{i} and B_{j}; "
            "the support pattern is not realizable"
        )
    a, b = ab
    z = np.zeros(3, dtype=complex)
    w = np.zeros(3, dtype=complex)
    z[i - 1] = np.sqrt(float(a))
    w[j - 1] = np.sqrt(float(b))
    return level_point(d, z, w)


# --- real-coordinate plumbing -------------------------------------------
# Layout: (Re z1, Im z1, ..., Re z3, Im z3, Re w1, Im w1, ..., Im w3).


def _c2r(v6: np.ndarray) -> np.ndarray:
    out = np.empty(12)
    out[0::2] = v6.real
    out[1::2] = v6.imag
    return out


def _r2c(x12: np.ndarray) -> np.ndarray:
    return x12[0::2] + 1j * x12[1::2]


def omega_matrix() -> np.ndarray:
    """Gram matrix of omega in real coordinates: omega(u, v) = u^T O v."""
    out = np.zeros((12, 12))
    for m in range(6):
        out[2 * m, 2 * m + 1] = -1.0
        out[2 * m + 1, 2 * m] = 1.0
    return out


def ambient_complex_structure() -> np.ndarray:
    """Multiplication by i in real coordinates."""
    return omega_matrix()  # same block structure: (re, im) -> (-im, re)


def constraint_values(d: DerivedConeData, z: np.ndarray, w: np.ndarray) -> np.ndarray:
    """F = (Re sum z_j w_j, Im sum z_j w_j, Phi - C) in R^4."""
    h = np.sum(z * w)
    phi = moment_map(d, (z, w))
    return np.array([h.real, h.imag, phi[0] - float(d.c[0]), phi[1] - float(d.c[1])])


def constraint_jacobian(d: DerivedConeData, z: np.ndarray, w: np.ndarray) -> np.ndarray:
    """4 x 12 real Jacobian of :func:`constraint_values`."""
    af, ag, bf, bg = _weight_arrays(d)
    jac = np.zeros((4, 12))
    for k in range(3):
        zr, zi = z[k].real, z[k].imag
        wr, wi = w[k].real, w[k].imag
        col_z, col_w = 2 * k, 6 + 2 * k
        # d(Re h), d(Im h): h is complex-bilinear in (z, w)
        jac[0, col_z], jac[0, col_z + 1] = wr, -wi
        jac[0, col_w], jac[0, col_w + 1] = zr, -zi
        jac[1, col_z], jac[1, col_z + 1] = wi, wr
        jac[1, col_w], jac[1, col_w + 1] = zi, zr
        # d(f), d(g): gradients of weighted square moduli
        jac[2, col_z], jac[2, col_z + 1] = 2 * af[k] * zr, 2 * af[k] * zi
        jac[2, col_w], jac[2, col_w + 1] = 2 * bf[k] * wr, 2 * bf[k] * wi
        jac[3, col_z], jac[3, col_z + 1] = 2 * ag[k] * zr, 2 * ag[k] * zi
        jac[3, col_w], jac[3, col_w + 1] = 2 * bg[k] * wr, 2 * bg[k] * wi
    return jac


def project_to_level(
    d: DerivedConeData,
    z0,
    w0,
    tol: float = 1e-12,
    max_iter: int = 50,
    tolerances: Tolerances = Tolerances(),
) -> LevelSetPoint:
    """Gauss-Newton projection of an ambient point onto the level set.

    Takes minimum-norm steps delta = -J^+ F; near a regular point the
    iteration converges quadratically. Raises when the iteration stalls or
    a factor collapses toward zero.
    """
    z = np.asarray(z0, dtype=complex).reshape(3).copy()
    w = np.asarray(w0, dtype=complex).reshape(3).copy()
    if np.max(np.abs(z)) <= tolerances.nonzero_floor or np.max(np.abs(w)) <= tolerances.nonzero_floor:
        raise ValueError("starting point must have nonzero z and w")
    for _ in range(max_iter):
        f = constraint_values(d, z, w)
        if np.linalg.norm(f) <= tol:
            return level_point(d, z, w, Tolerances(residual=max(tol * 10, 1e-11)))
        jac = constraint_jacobian(d, z, w)
        step, *_ = np.linalg.lstsq(jac, -f, rcond=None)
        x = _c2r(np.concatenate([z, w])) + step
        v = _r2c(x)
        z, w = v[:3], v[3:]
        if np.max(np.abs(z)) <= tolerances.nonzero_floor or np.max(np.abs(w)) <= tolerances.nonzero_floor:
            raise RuntimeError("projection collapsed a factor toward zero")
    raise RuntimeError(f"no convergence to {tol} within {max_iter} iterations")


def action_orbit_map(d: DerivedConeData, p, angles) -> LevelSetPoint:
    """Rotate by the torus element with the given two angles.

    z_j picks up the phase exp(i <A_j, theta>) and w_j the phase
    exp(i <B_j, theta>); both constraints are preserved because the phases
    drop from moduli and A_j + B_j is independent of j.
    """
    z, w = _as_zw(p)
    t1, t2 = float(angles[0]), float(angles[1])
    af, ag, bf, bg = _weight_arrays(d)
    z_new = z * np.exp(1j * (af * t1 + ag * t2))
    w_new = w * np.exp(1j * (bf * t1 + bg * t2))
    return level_point(d, z_new, w_new, Tolerances(residual=1e-9))


def transverse_frame(d: DerivedConeData, p, bc: np.ndarray | None = None):
    """Orbit fields X, Y and the transverse frame Z = X + JY, W = JX - Y.

    X and Y are the closed-form rotation fields of the two moment-map
    components: the z_j component of X is i * A_j[0] * z_j, of Y is
    i * A_j[1] * z_j, and likewise with B_j on w. An invertible 2x2 basis
    change mixes (X, Y) -> (X, Y) @ bc before the frame is formed. W = J Z
    holds exactly, and the induced structure on the level set rotates
    X -> Y -> -X.
    """
    z, w = _as_zw(p)
    af, ag, bf, bg = _weight_arrays(d)
    x6 = np.concatenate([1j * af * z, 1j * bf * w])
    y6 = np.concatenate([1j * ag * z, 1j * bg * w])
    if bc is not None:
        bc = np.asarray(bc, dtype=float)
        if bc.shape != (2, 2) or abs(np.linalg.det(bc)) < 1e-12:
            raise ValueError("bc must be an invertible 2x2 real matrix")
        x6, y6 = bc[0, 0] * x6 + bc[1, 0] * y6, bc[0, 1] * x6 + bc[1, 1] * y6
    z6 = x6 + 1j * y6
    w6 = 1j * x6 - y6
    return x6, y6, z6, w6


@dataclass
class PointCertificate:
    """Outcome of the pointwise transverse-Kahler checks.

    ``positivity_spectrum`` holds the 8 ascending eigenvalues of the
    symmetrized form omega(J_N u, v) on the tangent space of the level
    set; a passing certificate has exactly 2 near-zero eigenvalues (the
    orbit directions) and 6 comfortably positive ones.
    """

    regular: bool
    transversal: bool
    jacobian_rank: int
    combined_rank: int
    jn_square_error: float
    jn_xy_error: float
    omega_compat_error: float
    positivity_spectrum: tuple[float, ...]
    passed: bool

    def to_json(self) -> dict:
        return {
            "regular": self.regular,
            "transversal": self.transversal,
            "jacobian_rank": self.jacobian_rank,
            "combined_rank": self.combined_rank,
            "jn_square_error": self.jn_square_error,
            "jn_xy_error": self.jn_xy_error,
            "omega_compat_error": self.omega_compat_error,
            "positivity_spectrum": list(self.positivity_spectrum),
            "pass": self.passed,
        }


_OMEGA12 = omega_matrix()
_J12 = ambient_complex_structure()


def certify_point(
    d: DerivedConeData,
    p: LevelSetPoint,
    bc: np.ndarray | None = None,
    tol: Tolerances = Tolerances(),
) -> PointCertificate:
    """Run every pointwise check of the transverse Kahler construction.

    Steps: (a) rank of the 4x12 constraint Jacobian (regular iff 4);
    (b) orthonormal kernel basis = tangent space of the level set;
    (c) rank of kernel + span{Z, W} (transversal iff 10); (d) J_N u =
    projection of J u back into the kernel along span{Z, W}; (e) operator
    errors |J_N^2 + 1|, |J_N X - Y| + |J_N Y + X|, omega compatibility;
    (f) eigenvalues of the symmetrized omega(J_N -, -).

    Rank failures are reported in the certificate, not raised.
    """
    jac = constraint_jacobian(d, p.z, p.w)
    _, s, vt = np.linalg.svd(jac)
    smax = s[0] if s[0] > 0 else 1.0
    jac_rank = int(np.sum(s > tol.rank_rel * smax))
    if jac_rank < 4:
        return PointCertificate(
            False, False, jac_rank, 0, np.inf, np.inf, np.inf, (), False
        )
    q = vt[4:].T  # 12 x 8 orthonormal basis of the tangent space

    x6, y6, z6, w6 = transverse_frame(d, p, bc)
    xr, yr = _c2r(x6), _c2r(y6)
    span = np.column_stack([q, _c2r(z6), _c2r(w6)])
    s2 = np.linalg.svd(span, compute_uv=False)
    combined_rank = int(np.sum(s2 > tol.rank_rel * s2[0]))
    transversal = combined_rank == 10
    if not transversal:
        return PointCertificate(
            True, False, jac_rank, combined_rank, np.inf, np.inf, np.inf, (), False
        )

    # J_N on the kernel basis: solve [Q | Z W] (coords) = J Q, take the
    # Q-block of the coordinates.
    jq = _J12 @ q
    coords, *_ = np.linalg.lstsq(span, jq, rcond=None)
    k = coords[:8, :]

    jn_square_error = float(np.linalg.norm(k @ k + np.eye(8), 2))
    xi, eta = q.T @ xr, q.T @ yr
    jn_xy_error = float(
        np.linalg.norm(q @ (k @ xi) - yr) + np.linalg.norm(q @ (k @ eta) + xr)
    )
    omega_n = q.T @ _OMEGA12 @ q
    omega_compat_error = float(np.linalg.norm(k.T @ omega_n @ k - omega_n, 2))

    qform = k.T @ omega_n  # q(u, v) = omega(J_N u, v) in the kernel basis
    spectrum = np.linalg.eigvalsh(0.5 * (qform + qform.T))
    zero_count = int(np.sum(np.abs(spectrum) <= tol.zero))
    pos_count = int(np.sum(spectrum >= tol.pos * spectrum[-1]))
    spectrum_ok = zero_count == 2 and pos_count == 6

    passed = (
        transversal
        and jn_square_error <= tol.operator
        and jn_xy_error <= tol.operator
        and omega_compat_error <= tol.operator
        and spectrum_ok
    )
    return PointCertificate(
        True,
        True,
        jac_rank,
        combined_rank,
        jn_square_error,
        jn_xy_error,
        omega_compat_error,
        tuple(float(v) for v in spectrum),
        passed,
    )


def _support_witnesses(d: DerivedConeData) -> list[tuple[int, int]]:
    out = []
    for i in range(1, 4):
        for j in range(1, 4):
            if i != j and positive_combination(d.c, d.a[i - 1], d.b[j - 1]) is not None:
                out.append((i, j))
    return out


def certification_sample(
    d: DerivedConeData, n: int, seed, noise: float = 1e-2
) -> list[LevelSetPoint]:
    """Deterministic batch of n level-set points for certification.

    The exact single-support seeds come first, then Gauss-Newton
    projections of Gaussian perturbations of them; for the round
    normalization, embedded random special unitary matrices are mixed in.
    Each point draws from its own spawned RNG stream, so the batch is
    reproducible and order-independent of evaluation.
    """
    if n < 1:
        raise ValueError("sample count must be >= 1")
    pairs = _support_witnesses(d)
    if not pairs:
        raise ValueError("no realizable single-support point; nothing to sample")
    seeds = [sample_level_point(d, i, j) for i, j in pairs]
    streams = np.random.SeedSequence(seed).spawn(n)
    is_round = d == ROUND_DATA
    out: list[LevelSetPoint] = []
    for k in range(n):
        if k < len(seeds):
            out.append(seeds[k])
            continue
        if is_round and k % 3 == 2:
            out.append(embed_su3(random_su3(streams[k])))
            continue
        base = seeds[k % len(seeds)]
        rng = np.random.default_rng(streams[k])
        dz = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        dw = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        out.append(
            project_to_level(d, base.z + noise * dz, base.w + noise * dw)
        )
    return out
