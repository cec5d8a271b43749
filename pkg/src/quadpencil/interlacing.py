"""Eigenvalue comparison between two pencils under the form order.

When the stiffness form dominates (a0 >= a0_hat pointwise as quadratic
forms) and the damping form is dominated (d <= d_hat), every derived scalar
and every real eigenvalue in a shared interval (a, 0] moves the same way:
gamma <= gamma_hat, delta <= delta_hat, N <= N_hat and
lambda_n <= lambda_hat_n.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgumentError
from .pencil import AlphaSearch, QuadraticPencil, compute_alpha, compute_delta_gamma
from .variational import IntervalDelta, locate_real_eigenvalues

FORM_ORDER_TOL = 1e-12


@dataclass(frozen=True)
class ComparisonReport:
    form_order_ok: bool
    gamma_order_ok: bool
    delta_order_ok: bool
    n_ok: bool
    n_common: int
    per_n: tuple[tuple[float, float, bool], ...]
    interval: IntervalDelta | None
    n_left: int = 0
    n_right: int = 0
    gamma: float = 0.0
    gamma_hat: float = 0.0
    delta: float = 0.0
    delta_hat: float = 0.0

    @property
    def ok(self) -> bool:
        return (
            self.form_order_ok
            and self.gamma_order_ok
            and self.delta_order_ok
            and self.n_ok
            and all(entry[2] for entry in self.per_n)
        )

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "form_order_ok": self.form_order_ok,
            "gamma_order_ok": self.gamma_order_ok,
            "delta_order_ok": self.delta_order_ok,
            "n_ok": self.n_ok,
            "n_left": self.n_left,
            "n_right": self.n_right,
            "n_common": self.n_common,
            "gamma": self.gamma,
            "gamma_hat": self.gamma_hat,
            "delta": self.delta,
            "delta_hat": self.delta_hat,
            "interval_lower": None if self.interval is None else self.interval.lower,
            "per_n": [
                {"lambda": a, "lambda_hat": b, "ok": ok} for a, b, ok in self.per_n
            ],
        }


def check_form_order(p: QuadraticPencil, p_hat: QuadraticPencil) -> bool:
    """True iff A0 - A0_hat and D_hat - D are both positive semidefinite."""
    if p.dim != p_hat.dim:
        raise InvalidArgumentError(
            f"dimension mismatch: {p.dim} vs {p_hat.dim}"
        )
    stiff_gap = p.a0_matrix - p_hat.a0_matrix
    damp_gap = p_hat.d_matrix - p.d_matrix
    ok = True
    for gap in (stiff_gap, damp_gap):
        w = np.linalg.eigvalsh(gap)
        scale = float(np.max(np.abs(w))) if w.size else 0.0
        if w[0] < -FORM_ORDER_TOL * max(scale, 1e-300):
            ok = False
    return ok


def compare_eigenvalues(
    p: QuadraticPencil,
    p_hat: QuadraticPencil,
    a: float | None = None,
    tol: float = 1e-7,
    locate_tol: float = 1e-10,
    seed: int = 0,
    search: AlphaSearch | None = None,
) -> ComparisonReport:
    """Locate both spectra on a shared (a, 0] and verify the full ordering.

    With a omitted, the left endpoint is the larger of the two alpha
    estimates pushed toward zero by a relative 1e-6 safety margin (the
    estimates only bound alpha from below).
    """
    if not check_form_order(p, p_hat):
        raise InvalidArgumentError(
            "form order violated: need a0 >= a0_hat and d <= d_hat as quadratic forms"
        )
    alpha = compute_alpha(p, search=search, seed=seed).alpha
    alpha_hat = compute_alpha(p_hat, search=search, seed=seed + 1).alpha
    alpha_max = max(alpha, alpha_hat)
    if a is None:
        if not np.isfinite(alpha_max):
            raise InvalidArgumentError(
                "both real-root cones are empty; no comparison interval exists"
            )
        a = alpha_max + 1e-6 * abs(alpha_max)
    elif np.isfinite(alpha_max) and a < alpha_max - 1e-9 * max(1.0, abs(alpha_max)):
        raise InvalidArgumentError(
            f"left endpoint {a} lies below the larger alpha estimate {alpha_max}"
        )

    interval = IntervalDelta(lower=float(a))
    res = locate_real_eigenvalues(p, interval, locate_tol, alpha_estimate=alpha)
    res_hat = locate_real_eigenvalues(p_hat, interval, locate_tol, alpha_estimate=alpha_hat)

    delta, gamma = compute_delta_gamma(p)
    delta_hat, gamma_hat = compute_delta_gamma(p_hat)
    pad = 1e-12
    n = res.n_found
    n_hat = res_hat.n_found
    n_common = min(n, n_hat)
    per_n = tuple(
        (
            float(res.eigenvalues[i]),
            float(res_hat.eigenvalues[i]),
            bool(res.eigenvalues[i] <= res_hat.eigenvalues[i] + tol),
        )
        for i in range(n_common)
    )
    return ComparisonReport(
        form_order_ok=True,
        gamma_order_ok=gamma <= gamma_hat + pad * max(1.0, gamma_hat),
        delta_order_ok=delta <= delta_hat + pad * max(1.0, delta_hat),
        n_ok=n <= n_hat,
        n_common=n_common,
        per_n=per_n,
        interval=interval,
        n_left=n,
        n_right=n_hat,
        gamma=gamma,
        gamma_hat=gamma_hat,
        delta=delta,
        delta_hat=delta_hat,
    )
