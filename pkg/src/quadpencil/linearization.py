"""First-order block companion of the pencil and its full complex spectrum.

The companion operator is represented in whitened coordinates: conjugating
by diag(A0^{1/2}, I) turns the energy inner product into the standard one,
so signature symmetry, dissipativity and the closed-form inverse all become
plain dense-matrix statements checkable by ordinary eigensolvers.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import ComputationError, InvalidArgumentError
from .pencil import QuadraticPencil, compute_delta_gamma, disc_radius
from .reports import Report

J_SYMMETRY_TOL = 1e-12
INVERSE_IDENTITY_TOL = 1e-10
RANK_REL_TOL = 1e-8


@dataclass(frozen=True)
class LinearizedSystem:
    """2n x 2n companion matrix in whitened coordinates.

    a_matrix is [[0, A0^{1/2}], [-A0^{1/2}, -D]]; j_signature is
    diag(I, -I); inverse_matrix holds the closed-form inverse
    [[-A0^{-1/2} D A0^{-1/2}, -A0^{-1/2}], [A0^{-1/2}, 0]].
    """

    a_matrix: np.ndarray
    j_signature: np.ndarray
    inverse_matrix: np.ndarray
    dim: int

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.a_matrix, 2))


@dataclass(frozen=True)
class SpectrumResult:
    """Clustered eigenvalues of the companion matrix with multiplicities."""

    eigenvalues: np.ndarray          # one representative per cluster
    algebraic_multiplicities: np.ndarray
    geometric_multiplicities: np.ndarray
    residuals: np.ndarray            # max |A v - lam v| over cluster members
    cluster_tolerance: float
    raw_eigenvalues: np.ndarray      # all 2n values as returned by the solver

    def real_eigenvalues_in(self, lower: float, upper: float = 0.0):
        """Cluster representatives that are real (within cluster tolerance)
        and lie in (lower, upper], with their algebraic multiplicities."""
        out = []
        for lam, mult in zip(self.eigenvalues, self.algebraic_multiplicities):
            if abs(lam.imag) <= self.cluster_tolerance and lower < lam.real <= upper:
                out.append((float(lam.real), int(mult)))
        out.sort(key=lambda t: -t[0])
        return out


def build_linearization(pencil: QuadraticPencil) -> LinearizedSystem:
    n = pencil.dim
    s = pencil.a0_sqrt
    a = np.block([
        [np.zeros((n, n)), s],
        [-s, -pencil.d_matrix],
    ])
    inv = np.block([
        [-pencil.whitened_damping, -pencil.a0_inv_sqrt],
        [pencil.a0_inv_sqrt, np.zeros((n, n))],
    ])
    j = np.diag(np.concatenate([np.ones(n), -np.ones(n)]))
    system = LinearizedSystem(a_matrix=a, j_signature=j, inverse_matrix=inv, dim=n)

    scale = system.norm
    ja = j @ a
    sym_defect = np.linalg.norm(ja - ja.T, 2)
    if sym_defect > J_SYMMETRY_TOL * scale:
        raise ComputationError(
            "signature symmetry defect exceeds tolerance", defect=sym_defect, scale=scale
        )
    inv_defect = np.linalg.norm(a @ inv - np.eye(2 * n), 2)
    if inv_defect > INVERSE_IDENTITY_TOL:
        raise ComputationError(
            "closed-form inverse identity defect exceeds tolerance", defect=inv_defect
        )
    return system


def _cluster(values: np.ndarray, tol: float) -> list[np.ndarray]:
    """Single-linkage clustering of complex points; merges while any pair
    of clusters comes within tol."""
    clusters = [[i] for i in range(len(values))]
    merged = True
    while merged and len(clusters) > 1:
        merged = False
        for i in range(len(clusters)):
            for j in range(i + 1, len(clusters)):
                d = min(
                    abs(values[p] - values[q])
                    for p in clusters[i]
                    for q in clusters[j]
                )
                if d <= tol:
                    clusters[i] = clusters[i] + clusters[j]
                    del clusters[j]
                    merged = True
                    break
            if merged:
                break
    return [np.array(c, dtype=int) for c in clusters]


def _nullity(m: np.ndarray, rel_tol: float = RANK_REL_TOL) -> int:
    s = np.linalg.svd(m, compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return m.shape[1]
    return int(np.sum(s < rel_tol * s[0]))


def full_spectrum(
    system: LinearizedSystem, cluster_tolerance: float | None = None
) -> SpectrumResult:
    """All 2n eigenvalues with residuals, clustered into multiplicity groups.

    Geometric multiplicity is the numerical kernel dimension of (A - lam I);
    algebraic multiplicity is the cluster size.
    """
    if cluster_tolerance is None:
        cluster_tolerance = 1e-8 * system.norm
    try:
        w, v = scipy.linalg.eig(system.a_matrix)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK breakdown
        raise ComputationError(
            "eigensolver failed", condition=float(np.linalg.cond(system.a_matrix))
        ) from exc

    groups = _cluster(w, cluster_tolerance)
    reps, alg, geo, res = [], [], [], []
    eye = np.eye(2 * system.dim)
    for grp in groups:
        lam = complex(np.mean(w[grp]))
        reps.append(lam)
        alg.append(len(grp))
        geo.append(_nullity(system.a_matrix - lam * eye))
        r = 0.0
        for i in grp:
            vec = v[:, i]
            r = max(r, float(np.linalg.norm(system.a_matrix @ vec - lam * vec)
                             / np.linalg.norm(vec)))
        res.append(r)
    order = np.lexsort((np.abs(np.imag(reps)), -np.real(reps)))
    return SpectrumResult(
        eigenvalues=np.array(reps)[order],
        algebraic_multiplicities=np.array(alg, dtype=int)[order],
        geometric_multiplicities=np.array(geo, dtype=int)[order],
        residuals=np.array(res)[order],
        cluster_tolerance=float(cluster_tolerance),
        raw_eigenvalues=w,
    )


def structural_report(system: LinearizedSystem, spectrum: SpectrumResult) -> Report:
    """Signature symmetry, closed-form inverse, half-plane location,
    conjugation symmetry and invertibility, as one pass/fail report."""
    report = Report("structural_identities")
    scale = system.norm
    ja = system.j_signature @ system.a_matrix
    defect = float(np.linalg.norm(ja - ja.T, 2))
    report.add("j_symmetry", defect <= J_SYMMETRY_TOL * scale,
               defect=defect, bound=J_SYMMETRY_TOL * scale)
    inv_defect = float(np.linalg.norm(
        system.a_matrix @ system.inverse_matrix - np.eye(2 * system.dim), 2))
    report.add("inverse_identity", inv_defect <= INVERSE_IDENTITY_TOL,
               defect=inv_defect, bound=INVERSE_IDENTITY_TOL)
    max_re = float(np.max(spectrum.raw_eigenvalues.real))
    report.add("left_half_plane", max_re <= 1e-10 * scale,
               max_real_part=max_re, bound=1e-10 * scale)
    min_abs = float(np.min(np.abs(spectrum.raw_eigenvalues)))
    report.add("zero_not_eigenvalue", min_abs > spectrum.cluster_tolerance,
               min_abs=min_abs, cluster_tolerance=spectrum.cluster_tolerance)

    # Conjugation symmetry: every eigenvalue must have a conjugate partner.
    vals = list(spectrum.raw_eigenvalues)
    used = [False] * len(vals)
    paired = True
    worst = 0.0
    for i, lam in enumerate(vals):
        if used[i]:
            continue
        if abs(lam.imag) <= spectrum.cluster_tolerance:
            used[i] = True
            continue
        best_j, best_d = -1, np.inf
        for j in range(len(vals)):
            if j == i or used[j]:
                continue
            d = abs(vals[j] - np.conj(lam))
            if d < best_d:
                best_j, best_d = j, d
        if best_j >= 0 and best_d <= spectrum.cluster_tolerance:
            used[i] = used[best_j] = True
            worst = max(worst, best_d)
        else:
            paired = False
            worst = max(worst, best_d)
    report.add("conjugation_symmetry", paired, worst_pair_distance=worst)
    return report


def check_pencil_equivalence(pencil: QuadraticPencil, spectrum: SpectrumResult) -> Report:
    """Each companion eigenvalue must be a rank drop of T(lam) of the same depth.

    Verifies sigma_min(T(lam)) <= 1e-8 * |T(lam)| and numerical kernel
    dimension == geometric multiplicity, per cluster.
    """
    report = Report("pencil_equivalence")
    n = pencil.dim
    eye = np.eye(n)
    for lam, mult in zip(spectrum.eigenvalues, spectrum.geometric_multiplicities):
        t = lam * lam * eye + lam * pencil.d_matrix + pencil.a0_matrix
        s = np.linalg.svd(t, compute_uv=False)
        t_scale = float(s[0])
        sigma_min = float(s[-1])
        kernel_dim = int(np.sum(s < RANK_REL_TOL * t_scale))
        ok = sigma_min <= 1e-8 * t_scale and kernel_dim == int(mult)
        report.add(
            "eigenvalue_matches_pencil", ok,
            eigenvalue=complex(lam), sigma_min=sigma_min, scale=t_scale,
            kernel_dim=kernel_dim, geometric_multiplicity=int(mult),
        )
    # Zero must stay far from the pencil spectrum: T(0) = A0 is definite.
    s0 = np.linalg.svd(pencil.a0_matrix, compute_uv=False)
    report.add("zero_regular", s0[-1] > 1e-8 * s0[0], sigma_min=float(s0[-1]))
    return report


def semisimplicity_check(
    system: LinearizedSystem, lam: float, tol: float = RANK_REL_TOL
) -> bool:
    """True iff (A - lam) and (A - lam)^2 have equal numerical kernel dimension."""
    m = system.a_matrix - lam * np.eye(2 * system.dim)
    return _nullity(m, tol) == _nullity(m @ m, tol)


def resolvent_region_check(
    pencil: QuadraticPencil,
    spectrum: SpectrumResult,
    margin: float = 1e-9,
) -> Report:
    """No eigenvalue may enter the open disc around zero or the left wedge.

    The wedge is { -1/gamma <= Re z < 0, |Im z| <= |Re z| } minus the three
    exceptional points -1/gamma and -1/gamma +- i/gamma, which genuinely can
    carry spectrum; eigenvalues within `margin` of an exceptional point or of
    the region boundary are excused.
    """
    _, gamma = compute_delta_gamma(pencil)
    if gamma == 0.0:
        raise InvalidArgumentError("resolvent region check requires nonzero damping")
    radius = disc_radius(pencil)
    report = Report("resolvent_exclusion_regions")
    inv_g = 1.0 / gamma
    exceptional = [complex(-inv_g, 0.0), complex(-inv_g, inv_g), complex(-inv_g, -inv_g)]
    eps = margin * max(1.0, inv_g)

    worst_disc = 0.0
    disc_ok = True
    for lam in spectrum.raw_eigenvalues:
        depth = radius - abs(lam)
        if depth > margin * radius:
            disc_ok = False
            worst_disc = max(worst_disc, depth)
    report.add("open_disc_excluded", disc_ok, radius=radius,
               worst_violation_depth=worst_disc)

    triangle_ok = True
    violations = []
    for lam in spectrum.raw_eigenvalues:
        if min(abs(lam - e) for e in exceptional) <= eps:
            continue
        inside = (
            lam.real >= -inv_g + eps
            and lam.real <= -eps
            and abs(lam.imag) <= -lam.real - eps
        )
        if inside:
            triangle_ok = False
            violations.append({
                "eigenvalue": complex(lam),
                "distance_to_vertical_edge": float(lam.real + inv_g),
                "distance_to_wedge_edge": float(-lam.real - abs(lam.imag)),
            })
    report.add("triangle_excluded", triangle_ok, gamma=gamma,
               inv_gamma=inv_g, violations=violations)
    return report
