"""Data model for the damped quadratic pencil T(lam) = lam^2 I + lam D + A0.

A0 is symmetric positive definite (stiffness), D symmetric positive
semidefinite (damping), the mass operator is the identity. The module owns
the scalar machinery built on the quadratic form
t(lam)[x] = lam^2 |x|^2 + lam d[x] + a0[x]: the root functionals p-/p+, the
cone of vectors with real roots, the damping-to-stiffness ratio extremes
(delta, gamma), the left endpoint alpha = sup p- and the resolvent disc
radius.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import numpy as np
from scipy.optimize import minimize

from .errors import InvalidArgumentError
from .reports import Report

# Relative eigenvalue threshold for definiteness checks at construction.
DEFINITENESS_TOL = 1e-12
# Discriminants in [-DISC_CLAMP_TOL * scale, 0) are treated as exact double roots.
DISC_CLAMP_TOL = 1e-12


class OperatorKind(str, Enum):
    POSITIVE_DEFINITE = "positive_definite"
    POSITIVE_SEMIDEFINITE = "positive_semidefinite"


class DstarVerdict(str, Enum):
    EMPTY_CERTIFIED = "empty_certified"
    NONEMPTY_CERTIFIED = "nonempty_certified"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class SymmetricOperator:
    """Dense real symmetric matrix with a positivity contract.

    Construction symmetrizes the input exactly and verifies the contract
    through an eigenvalue check relative to the matrix norm.
    """

    entries: np.ndarray
    kind: OperatorKind

    def __post_init__(self):
        m = np.asarray(self.entries, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
            raise InvalidArgumentError(f"expected a square matrix, got shape {m.shape}")
        m = (m + m.T) / 2.0
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)
        object.__setattr__(self, "kind", OperatorKind(self.kind))
        w = np.linalg.eigvalsh(m)
        scale = float(np.max(np.abs(w))) if w.size else 0.0
        tol = DEFINITENESS_TOL * scale
        if self.kind is OperatorKind.POSITIVE_DEFINITE:
            if w[0] <= tol:
                raise InvalidArgumentError(
                    f"matrix is not positive definite: min eigenvalue {w[0]:.3e} "
                    f"(threshold {tol:.3e})"
                )
        else:
            if w[0] < -tol:
                raise InvalidArgumentError(
                    f"matrix is not positive semidefinite: min eigenvalue {w[0]:.3e}"
                )

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class QuadraticPencil:
    """The pair (A0, D) with identity mass; all analysis runs on this object."""

    a0: SymmetricOperator
    d: SymmetricOperator

    def __post_init__(self):
        if self.a0.kind is not OperatorKind.POSITIVE_DEFINITE:
            raise InvalidArgumentError("stiffness operator must be positive definite")
        if self.d.kind is not OperatorKind.POSITIVE_SEMIDEFINITE:
            raise InvalidArgumentError("damping operator must be positive semidefinite")
        if self.a0.dim != self.d.dim:
            raise InvalidArgumentError(
                f"dimension mismatch: stiffness {self.a0.dim}, damping {self.d.dim}"
            )

    @classmethod
    def from_matrices(cls, a0, d) -> "QuadraticPencil":
        return cls(
            SymmetricOperator(np.asarray(a0, float), OperatorKind.POSITIVE_DEFINITE),
            SymmetricOperator(np.asarray(d, float), OperatorKind.POSITIVE_SEMIDEFINITE),
        )

    @property
    def dim(self) -> int:
        return self.a0.dim

    @property
    def a0_matrix(self) -> np.ndarray:
        return self.a0.entries

    @property
    def d_matrix(self) -> np.ndarray:
        return self.d.entries

    @cached_property
    def _a0_eig(self) -> tuple[np.ndarray, np.ndarray]:
        w, v = np.linalg.eigh(self.a0_matrix)
        return w, v

    @cached_property
    def a0_sqrt(self) -> np.ndarray:
        w, v = self._a0_eig
        return (v * np.sqrt(w)) @ v.T

    @cached_property
    def a0_inv_sqrt(self) -> np.ndarray:
        w, v = self._a0_eig
        return (v / np.sqrt(w)) @ v.T

    @cached_property
    def a0_inv(self) -> np.ndarray:
        w, v = self._a0_eig
        return (v / w) @ v.T

    @cached_property
    def a0_inv_norm(self) -> float:
        """Spectral norm of A0^{-1}, i.e. 1 / min eig(A0)."""
        return float(1.0 / self._a0_eig[0][0])

    @cached_property
    def whitened_damping(self) -> np.ndarray:
        """A0^{-1/2} D A0^{-1/2}, symmetric PSD; carries delta and gamma."""
        s = self.a0_inv_sqrt @ self.d_matrix @ self.a0_inv_sqrt
        return (s + s.T) / 2.0

    def t_matrix(self, lam: float) -> np.ndarray:
        """The symmetric matrix T(lam) = lam^2 I + lam D + A0 for real lam."""
        n = self.dim
        return lam * lam * np.eye(n) + lam * self.d_matrix + self.a0_matrix

    def form_stiffness(self, x: np.ndarray) -> float:
        x = np.asarray(x)
        return float(np.real(np.vdot(x, self.a0_matrix @ x)))

    def form_damping(self, x: np.ndarray) -> float:
        x = np.asarray(x)
        return float(np.real(np.vdot(x, self.d_matrix @ x)))

    def scalar_coefficients(self, x: np.ndarray) -> tuple[float, float, float]:
        """Coefficients (|x|^2, d[x], a0[x]) of the scalar quadratic t(.)[x]."""
        x = np.asarray(x)
        a = float(np.real(np.vdot(x, x)))
        return a, self.form_damping(x), self.form_stiffness(x)


@dataclass(frozen=True)
class RayleighPair:
    """Real roots of t(.)[x] = 0, or the (+inf, -inf) convention when none exist."""

    p_minus: float
    p_plus: float
    in_dstar: bool


@dataclass(frozen=True)
class PencilScalars:
    """Derived constants of the pencil.

    delta0 and gamma0 are the essential-spectrum analogues of delta/gamma;
    in finite dimension they are fixed at +inf and 0 and are stored only so
    every derived constant has a single home.
    """

    delta: float
    gamma: float
    alpha: float
    disc_radius: float
    delta0: float = np.inf
    gamma0: float = 0.0
    alpha_is_estimate: bool = True


@dataclass(frozen=True)
class AlphaSearch:
    multistart: int = 48
    refine_tol: float = 1e-12


@dataclass(frozen=True)
class AlphaResult:
    alpha: float
    witness: np.ndarray | None
    is_estimate: bool
    certificate: DstarVerdict


@dataclass(frozen=True)
class DstarCertificate:
    verdict: DstarVerdict
    witness: np.ndarray | None


def evaluate_form(pencil: QuadraticPencil, lam: complex, x, y=None) -> complex:
    """Evaluate t(lam)[x, y] = lam^2 <x,y> + lam d[x,y] + a0[x,y].

    The inner product is the standard one, conjugate-linear in y. With
    y omitted the quadratic form t(lam)[x] is returned.
    """
    x = np.asarray(x)
    y = x if y is None else np.asarray(y)
    if x.shape != (pencil.dim,) or y.shape != (pencil.dim,):
        raise InvalidArgumentError(
            f"vector shapes {x.shape}, {y.shape} do not match pencil dimension {pencil.dim}"
        )
    lam = complex(lam)
    return (
        lam * lam * complex(np.vdot(y, x))
        + lam * complex(np.vdot(y, pencil.d_matrix @ x))
        + complex(np.vdot(y, pencil.a0_matrix @ x))
    )


def _stable_real_roots(a: float, b: float, c: float) -> tuple[float, float] | None:
    """Real roots of a q^2 + b q + c with a, c > 0, b >= 0, cancellation-free.

    Returns (smaller, larger) or None when the (clamped) discriminant is
    negative. Discriminants within -DISC_CLAMP_TOL * scale of zero count as
    double roots; the cone boundary is measure-zero but numerically reachable.
    """
    disc = b * b - 4.0 * a * c
    scale = max(b * b, abs(4.0 * a * c))
    if disc < 0.0:
        if disc >= -DISC_CLAMP_TOL * scale:
            disc = 0.0
        else:
            return None
    q = -(b + np.sqrt(disc)) / 2.0
    # b > 0 whenever disc >= 0 (since a, c > 0), so q < 0 and no cancellation.
    return q / a, c / q


def rayleigh_pair(pencil: QuadraticPencil, x) -> RayleighPair:
    """Solve t(lam)[x] = 0 for real lam.

    Returns both roots when the discriminant d[x]^2 - 4 |x|^2 a0[x] is
    nonnegative, else the (p_minus, p_plus) = (+inf, -inf) convention with
    in_dstar False.
    """
    x = np.asarray(x)
    if x.shape != (pencil.dim,):
        raise InvalidArgumentError(
            f"vector shape {x.shape} does not match pencil dimension {pencil.dim}"
        )
    a, b, c = pencil.scalar_coefficients(x)
    if a == 0.0:
        raise InvalidArgumentError("rayleigh_pair requires a nonzero vector")
    roots = _stable_real_roots(a, b, c)
    if roots is None:
        return RayleighPair(np.inf, -np.inf, False)
    return RayleighPair(roots[0], roots[1], True)


def rayleigh_batch(
    pencil: QuadraticPencil, columns: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized rayleigh_pair over the columns of an (n, m) array.

    Returns (p_minus, p_plus, in_dstar) arrays; columns outside the real-root
    cone get (+inf, -inf, False).
    """
    X = np.asarray(columns, dtype=float)
    if X.ndim != 2 or X.shape[0] != pencil.dim:
        raise InvalidArgumentError(
            f"expected shape ({pencil.dim}, m), got {X.shape}"
        )
    a = np.einsum("ij,ij->j", X, X)
    if np.any(a == 0.0):
        raise InvalidArgumentError("rayleigh_batch requires nonzero columns")
    b = np.einsum("ij,ij->j", X, pencil.d_matrix @ X)
    c = np.einsum("ij,ij->j", X, pencil.a0_matrix @ X)
    disc = b * b - 4.0 * a * c
    scale = np.maximum(b * b, np.abs(4.0 * a * c))
    disc = np.where((disc < 0.0) & (disc >= -DISC_CLAMP_TOL * scale), 0.0, disc)
    feasible = disc >= 0.0
    p_minus = np.full(X.shape[1], np.inf)
    p_plus = np.full(X.shape[1], -np.inf)
    if np.any(feasible):
        q = -(b[feasible] + np.sqrt(disc[feasible])) / 2.0
        p_minus[feasible] = q / a[feasible]
        p_plus[feasible] = c[feasible] / q
    return p_minus, p_plus, feasible


def compute_delta_gamma(pencil: QuadraticPencil) -> tuple[float, float]:
    """Extreme eigenvalues (min, max) of the whitened damping A0^{-1/2} D A0^{-1/2}."""
    w = np.linalg.eigvalsh(pencil.whitened_damping)
    delta = max(float(w[0]), 0.0)
    gamma = max(float(w[-1]), 0.0)
    return delta, gamma


def disc_radius(pencil: QuadraticPencil) -> float:
    """Radius of the eigenvalue-free open disc around zero."""
    _, gamma = compute_delta_gamma(pencil)
    return 2.0 / (gamma + np.sqrt(gamma * gamma + 4.0 * pencil.a0_inv_norm))


def verify_gamma_as_form_ratio(
    pencil: QuadraticPencil, samples: int, seed: int, tol: float = 1e-10
) -> Report:
    """Check delta <= d[y]/a0[y] <= gamma on random vectors plus attainment.

    The sup/inf must be attained (within tol) at the whitened eigenvectors
    mapped back by A0^{-1/2}.
    """
    if samples < 1:
        raise InvalidArgumentError("samples must be >= 1")
    delta, gamma = compute_delta_gamma(pencil)
    rng = np.random.default_rng(seed)
    report = Report("gamma_as_form_ratio")
    pad = 1e-12 * max(1.0, gamma)
    for k in range(samples):
        y = rng.standard_normal(pencil.dim)
        while np.linalg.norm(y) < 1e-6:
            y = rng.standard_normal(pencil.dim)
        ratio = pencil.form_damping(y) / pencil.form_stiffness(y)
        ok = (delta - pad) <= ratio <= (gamma + pad)
        if not ok:
            report.add("ratio_in_range", False, sample=k, ratio=ratio,
                       delta=delta, gamma=gamma, witness=y)
    report.add("ratio_in_range", True, samples=samples, delta=delta, gamma=gamma)
    w, v = np.linalg.eigh(pencil.whitened_damping)
    scale = max(1.0, gamma)
    for label, idx, target in (("inf_attained", 0, delta), ("sup_attained", -1, gamma)):
        y = pencil.a0_inv_sqrt @ v[:, idx]
        ratio = pencil.form_damping(y) / pencil.form_stiffness(y)
        report.add(label, abs(ratio - target) <= tol * scale,
                   ratio=ratio, target=target, witness=y)
    return report


def dstar_empty_certificate(pencil: QuadraticPencil) -> DstarCertificate:
    """Decide emptiness of the real-root cone when one of two criteria applies.

    empty:    whitened damping < 2 A0^{-1/2} in the operator order;
    nonempty: |whitened damping| > 2 |A0^{-1/2}| in spectral norm, witnessed
              by mapping a top eigenvector back through A0^{-1/2}.
    The two criteria are not exhaustive; the boundary case is inconclusive.
    """
    s = pencil.whitened_damping
    r = pencil.a0_inv_sqrt
    s_norm = float(np.max(np.abs(np.linalg.eigvalsh(s))))
    r_norm = float(np.sqrt(pencil.a0_inv_norm))
    scale = max(s_norm, 2.0 * r_norm)
    gap = np.linalg.eigvalsh(s - 2.0 * r)
    if gap[-1] < -1e-12 * scale:
        return DstarCertificate(DstarVerdict.EMPTY_CERTIFIED, None)
    if s_norm > 2.0 * r_norm + 1e-12 * scale:
        w, v = np.linalg.eigh(s)
        x = r @ v[:, -1]
        pair = rayleigh_pair(pencil, x)
        if pair.in_dstar:
            return DstarCertificate(DstarVerdict.NONEMPTY_CERTIFIED, x)
    return DstarCertificate(DstarVerdict.INCONCLUSIVE, None)


def _penalized_neg_p_minus(pencil: QuadraticPencil):
    """Objective for maximizing p_minus: smooth inside the cone, graded outside."""
    d_mat, a_mat = pencil.d_matrix, pencil.a0_matrix

    def objective(z):
        nz = np.linalg.norm(z)
        if nz < 1e-10:
            return 1e12
        x = z / nz
        a = 1.0
        b = float(x @ (d_mat @ x))
        c = float(x @ (a_mat @ x))
        disc = b * b - 4.0 * a * c
        if disc < 0.0:
            return 1e6 * (1.0 - disc / max(4.0 * a * c, 1e-300))
        return (b + np.sqrt(disc)) / (2.0 * a)

    return objective


def _boundary_polish(pencil: QuadraticPencil, x0: np.ndarray) -> np.ndarray | None:
    """Refine a near-boundary maximizer of p_minus along the zero-discriminant set.

    On the boundary p_minus equals -d[x] / (2 |x|^2), which is smooth, so an
    equality-constrained step recovers the square-root cusp accurately.
    """
    d_mat, a_mat = pencil.d_matrix, pencil.a0_matrix

    def vertex(z):
        a = float(z @ z)
        if a < 1e-20:
            return 1e12
        return float(z @ (d_mat @ z)) / (2.0 * a)

    def disc_rel(z):
        a = float(z @ z)
        b = float(z @ (d_mat @ z))
        c = float(z @ (a_mat @ z))
        return (b * b - 4.0 * a * c) / max(4.0 * a * c, 1e-300)

    try:
        res = minimize(
            vertex, x0, method="SLSQP",
            constraints=[{"type": "eq", "fun": disc_rel}],
            options={"ftol": 1e-14, "maxiter": 300},
        )
    except Exception:
        return None
    if not np.all(np.isfinite(res.x)) or np.linalg.norm(res.x) < 1e-10:
        return None
    return res.x / np.linalg.norm(res.x)


def compute_alpha(
    pencil: QuadraticPencil,
    search: AlphaSearch | None = None,
    seed: int = 0,
) -> AlphaResult:
    """Estimate alpha = sup of p_minus over the real-root cone.

    Multistart maximization (random directions mixed with whitened-damping
    eigenvector starts and the nonemptiness witness), Nelder-Mead refinement
    with a feasibility penalty, then an equality-constrained polish along the
    cone boundary where the supremum often sits. Returns -inf exactly when
    the cone is certified empty; any finite value is flagged as an estimate
    from below.
    """
    search = search or AlphaSearch()
    cert = dstar_empty_certificate(pencil)
    if np.linalg.norm(pencil.d_matrix) == 0.0 or cert.verdict is DstarVerdict.EMPTY_CERTIFIED:
        return AlphaResult(-np.inf, None, False, DstarVerdict.EMPTY_CERTIFIED)

    n = pencil.dim
    rng = np.random.default_rng(seed)
    structured = []
    if cert.witness is not None:
        structured.append(cert.witness / np.linalg.norm(cert.witness))
    _, v = np.linalg.eigh(pencil.whitened_damping)
    for j in range(n):
        y = pencil.a0_inv_sqrt @ v[:, j]
        structured.append(y / np.linalg.norm(y))
    structured.extend(np.eye(n))

    # Batched prescreen of random directions; only the best few earn a
    # local refinement.
    n_random = max(64, 16 * search.multistart)
    randoms = rng.standard_normal((n, n_random))
    randoms /= np.linalg.norm(randoms, axis=0, keepdims=True)
    columns = np.hstack([np.column_stack(structured), randoms])
    p_minus, _, feasible = rayleigh_batch(pencil, columns)
    order = np.argsort(-np.where(feasible, p_minus, -np.inf))
    n_coarse = min(columns.shape[1], max(6, search.multistart // 4))
    seeds = [columns[:, i] for i in order[:n_coarse]]
    # Keep structured starts in play even when infeasible: the penalty walks
    # them toward the cone.
    seeds.extend(structured[: min(len(structured), 2 * n + 1)])

    objective = _penalized_neg_p_minus(pencil)
    coarse = []
    for x0 in seeds:
        res = minimize(
            objective, x0, method="Nelder-Mead",
            options={"xatol": 1e-8, "fatol": 1e-10, "maxiter": 160 * n},
        )
        if res.fun < 1e5:
            coarse.append((float(-res.fun), res.x / np.linalg.norm(res.x)))
    feasible_best = [float(p_minus[i]) for i in order[:1] if feasible[order[0]]]
    if not coarse and not feasible_best:
        # No feasible point sampled and emptiness not certified.
        return AlphaResult(-np.inf, None, True, cert.verdict)

    coarse.sort(key=lambda t: -t[0])
    best_val, best_x = coarse[0] if coarse else (feasible_best[0], columns[:, order[0]])
    for val, x0 in coarse[:3]:
        res = minimize(
            objective, x0, method="Nelder-Mead",
            options={"xatol": search.refine_tol, "fatol": search.refine_tol,
                     "maxiter": 400 * n},
        )
        if res.fun < 1e5 and -res.fun > best_val:
            best_val, best_x = float(-res.fun), res.x / np.linalg.norm(res.x)

    polished = _boundary_polish(pencil, best_x)
    if polished is not None:
        pm, _, feas = rayleigh_batch(pencil, polished[:, None])
        if feas[0] and pm[0] > best_val:
            best_val, best_x = float(pm[0]), polished

    return AlphaResult(float(best_val), best_x, True, cert.verdict)


def compute_scalars(
    pencil: QuadraticPencil,
    search: AlphaSearch | None = None,
    seed: int = 0,
) -> PencilScalars:
    """Assemble the derived constants delta, gamma, alpha and the disc radius."""
    delta, gamma = compute_delta_gamma(pencil)
    alpha = compute_alpha(pencil, search=search, seed=seed)
    radius = 2.0 / (gamma + np.sqrt(gamma * gamma + 4.0 * pencil.a0_inv_norm))
    return PencilScalars(
        delta=delta,
        gamma=gamma,
        alpha=alpha.alpha,
        disc_radius=radius,
        alpha_is_estimate=alpha.is_estimate,
    )
