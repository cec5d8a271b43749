"""Independent reference computations used to freeze expected test values.

Every oracle here avoids the code paths it checks: scalar roots come from
the companion matrix (numpy.roots), pencil spectra from the interpolated
determinant polynomial, supremum searches from dense direction grids, beam
entries from adaptive quadrature, and evolution references from an explicit
modal decomposition.
"""
import numpy as np
from scipy.integrate import quad


def quad_roots(a, b, c):
    """Real roots of a x^2 + b x + c via the companion matrix, sorted."""
    roots = np.roots([a, b, c])
    real = np.sort(roots[np.abs(roots.imag) < 1e-12].real)
    return real


def det_poly_eigenvalues(a0, d):
    """Spectrum of the pencil as roots of the interpolated det polynomial.

    det(z^2 I + z D + A0) is a monic polynomial of degree 2n; its values on
    a scaled root-of-unity circle determine the coefficients exactly, and
    numpy.roots supplies the companion-matrix roots.
    """
    a0 = np.asarray(a0, float)
    d = np.asarray(d, float)
    n = a0.shape[0]
    deg = 2 * n
    count = deg + 1
    rho = 1.0 + np.sqrt(np.linalg.norm(a0, 2)) + np.linalg.norm(d, 2)
    zs = rho * np.exp(2j * np.pi * np.arange(count) / count)
    vals = np.array([np.linalg.det(z * z * np.eye(n) + z * d + a0) for z in zs])
    coeffs = np.fft.fft(vals) / count / rho ** np.arange(count)
    assert abs(coeffs[-1] - 1.0) < 1e-6, "determinant polynomial must be monic"
    return np.roots(coeffs[::-1])


def p_minus_grid_2d(a0, d, points=400001):
    """Dense direction grid for sup p_minus in two dimensions.

    Underestimates the supremum near the cone boundary (square-root cusp);
    use as a lower reference only.
    """
    theta = np.linspace(0.0, np.pi, points)
    x = np.vstack([np.cos(theta), np.sin(theta)])
    a = np.ones(points)
    b = np.einsum("ij,ij->j", x, np.asarray(d) @ x)
    c = np.einsum("ij,ij->j", x, np.asarray(a0) @ x)
    disc = b * b - 4.0 * a * c
    ok = disc >= 0.0
    if not np.any(ok):
        return -np.inf
    return float(np.max((-b[ok] - np.sqrt(disc[ok])) / (2.0 * a[ok])))


def damping_entry_adaptive(profile, m, n):
    """Beam damping matrix entry by adaptive quadrature."""
    val, err = quad(
        lambda r: profile(r) * np.cos(m * np.pi * r) * np.cos(n * np.pi * r),
        0.0, 1.0, epsabs=1e-13, epsrel=1e-13, limit=400,
    )
    assert err < 1e-10
    return 2.0 * m * n * np.pi**2 * val


def modal_energy(a_matrix, u0, times):
    """Exact squared-norm history of u' = A u from the eigendecomposition."""
    w, v = np.linalg.eig(a_matrix)
    coeff = np.linalg.solve(v, u0)
    energies = []
    for t in times:
        u = v @ (np.exp(w * t) * coeff)
        energies.append(float(np.real(np.vdot(u, u))))
    return np.array(energies)
