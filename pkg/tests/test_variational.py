import numpy as np
import pytest

from quadpencil import (
    BeamConfig,
    IntervalDelta,
    InvalidArgumentError,
    MatrixQuadraticFamily,
    QuadraticPencil,
    build_linearization,
    compute_alpha,
    discretize_beam,
    full_spectrum,
    generic_engine_fixture_2x2,
    inertia_negative,
    locate_real_eigenvalues,
    make_damping_profile,
    scalar_real_roots,
    semisimplicity_check,
    verify_minmax,
)
from quadpencil import rayleigh_pair
from quadpencil.config import random_pencil
from quadpencil.variational import _counted, _polish

from oracles import quad_roots

SQRT7 = np.sqrt(7.0)


class TestScalarRoots:
    def test_matches_companion_oracle(self):
        rng = np.random.default_rng(0)
        for _ in range(200):
            a = rng.uniform(0.1, 5.0)
            b = rng.uniform(-10.0, 10.0)
            c = rng.uniform(-10.0, 10.0)
            mine = scalar_real_roots(a, b, c)
            ref = quad_roots(a, b, c)
            if mine is None:
                assert ref.size == 0
            else:
                assert np.allclose(sorted(mine), ref, rtol=1e-10, atol=1e-12)

    def test_affine_case(self):
        assert scalar_real_roots(0.0, 2.0, -6.0) == (3.0,)
        assert scalar_real_roots(0.0, 0.0, 1.0) is None

    def test_cancellation_free(self):
        # huge b dwarfing 4ac: the small root must keep full precision
        roots = scalar_real_roots(1.0, 1e8, 1.0)
        assert roots[1] == pytest.approx(-1e-8, rel=1e-12)


class TestInertia:
    def test_at_zero(self, diag_pencil):
        ic = inertia_negative(diag_pencil, 0.0)
        assert ic.negative == 0 and ic.boundary == 0

    def test_between_roots(self, diag_pencil):
        assert inertia_negative(diag_pencil, -1.0).negative == 1

    def test_far_left(self, diag_pencil):
        assert inertia_negative(diag_pencil, -100.0).negative == 0

    def test_boundary_flag_at_eigenvalue(self, diag_pencil):
        ic = inertia_negative(diag_pencil, -3.0 + SQRT7)
        assert ic.boundary >= 1

    def test_monotone_on_valid_interval(self, diag_pencil):
        alpha = compute_alpha(diag_pencil, seed=0).alpha
        grid = np.linspace(alpha * (1 - 1e-9), 0.0, 200)
        counts = [inertia_negative(diag_pencil, g).negative for g in grid]
        assert all(c1 >= c2 for c1, c2 in zip(counts, counts[1:]))


class TestLocate:
    def test_diag_fixture(self, diag_pencil):
        res = locate_real_eigenvalues(diag_pencil, IntervalDelta(lower=-5.64), 1e-10)
        assert res.n_found == 1
        assert res.kappa == 0
        assert res.eigenvalues[0] == pytest.approx(-3.0 + SQRT7, abs=1e-12)
        diag = res.per_eigenvalue[0]
        assert diag.multiplicity == 1
        assert diag.semisimple
        assert diag.residual <= 1e-8 * diag.t_scale

    def test_undamped_finds_nothing(self, undamped_pencil):
        res = locate_real_eigenvalues(undamped_pencil, IntervalDelta(lower=-50.0), 1e-10)
        assert res.n_found == 0

    def test_wide_interval_catches_companion_root(self, diag_pencil):
        res = locate_real_eigenvalues(diag_pencil, IntervalDelta(lower=-7.0), 1e-10)
        assert res.n_found == 2
        assert np.allclose(res.eigenvalues, [-3.0 + SQRT7, -3.0 - SQRT7], atol=1e-10)

    def test_beam_modes_inside_window(self):
        cfg = BeamConfig(
            a0=1.0,
            damping=make_damping_profile({"profile": "constant", "params": {"value": 4.0}}),
            n_modes=6,
        )
        pencil = discretize_beam(cfg)
        res = locate_real_eigenvalues(pencil, IntervalDelta(lower=-2.0 * np.pi**2), 1e-10)
        expected = (-2.0 + np.sqrt(3.0)) * np.pi**2 * np.array([1.0, 4.0])
        assert np.allclose(res.eigenvalues, expected, atol=1e-10)
        # the n = 3 branch value sits left of the window
        assert (-2.0 + np.sqrt(3.0)) * 9.0 * np.pi**2 < -2.0 * np.pi**2

    def test_alpha_gate(self, diag_pencil):
        with pytest.raises(InvalidArgumentError):
            locate_real_eigenvalues(
                diag_pencil, IntervalDelta(lower=-5.0), 1e-10, alpha_estimate=-2.14
            )

    def test_interval_validation(self):
        with pytest.raises(InvalidArgumentError):
            IntervalDelta(lower=1.0)
        with pytest.raises(InvalidArgumentError):
            IntervalDelta(lower=-1.0, upper=-0.5)

    def test_tol_validation(self, diag_pencil):
        with pytest.raises(InvalidArgumentError):
            locate_real_eigenvalues(diag_pencil, IntervalDelta(lower=-1.0), 0.0)

    def test_matches_linearization_random(self):
        for seed in range(8):
            pencil = random_pencil(3 + seed % 6, 700 + seed, damping_scale=5.0,
                                   ensure_real_root_cone=True)
            alpha = compute_alpha(pencil, seed=seed).alpha
            lower = alpha + 1e-6 * abs(alpha)
            res = locate_real_eigenvalues(
                pencil, IntervalDelta(lower=lower), 1e-10, alpha_estimate=alpha
            )
            spec = full_spectrum(build_linearization(pencil))
            expected = []
            for lam, mult in spec.real_eigenvalues_in(lower):
                expected.extend([lam] * mult)
            assert len(expected) == res.n_found
            assert np.allclose(res.eigenvalues, expected, atol=1e-7)

    def test_semisimple_and_derivative_positive_in_open_interval(self):
        for seed in range(6):
            pencil = random_pencil(4, 900 + seed, damping_scale=5.0,
                                   ensure_real_root_cone=True)
            alpha = compute_alpha(pencil, seed=seed).alpha
            lower = alpha + 1e-6 * abs(alpha)
            res = locate_real_eigenvalues(
                pencil, IntervalDelta(lower=lower), 1e-10, alpha_estimate=alpha
            )
            system = build_linearization(pencil)
            for diag in res.per_eigenvalue:
                if diag.value <= lower or diag.value >= 0.0:
                    continue
                assert diag.semisimple
                assert semisimplicity_check(system, diag.value)
                # derivative positivity at the root
                w, v = np.linalg.eigh(pencil.t_matrix(diag.value))
                x = v[:, int(np.argmin(np.abs(w)))]
                slope = 2.0 * diag.value * (x @ x) + pencil.form_damping(x)
                assert slope > 0.0

    def test_polish_bracket_width_decreases(self, diag_pencil):
        target = -3.0 + SQRT7
        lo, hi = target - 0.21, target + 0.17
        _, c_lo = _counted(diag_pencil, lo, 1e-10)
        _, c_hi = _counted(diag_pencil, hi, 1e-10)
        widths = []
        lam, _, _ = _polish(diag_pencil, lo, hi, c_lo, c_hi, 200, width_trace=widths)
        assert lam == pytest.approx(target, abs=1e-12)
        assert all(w1 > w2 for w1, w2 in zip(widths, widths[1:]))


class TestVerifyMinmax:
    def test_diag_fixture(self, diag_pencil):
        alpha = compute_alpha(diag_pencil, seed=0).alpha
        res = locate_real_eigenvalues(
            diag_pencil, IntervalDelta(lower=alpha + 1e-6 * abs(alpha)), 1e-10
        )
        report = verify_minmax(diag_pencil, res, random_subspaces=60, seed=3)
        assert report.ok, report.failures()
        # achievement witness: the first eigenvector's root IS lambda_1
        assert rayleigh_pair(diag_pencil, [1.0, 0.0]).p_plus == pytest.approx(
            res.eigenvalues[0], abs=1e-12
        )

    def test_random_coupled(self):
        for seed in (1, 4):
            pencil = random_pencil(5, 1000 + seed, damping_scale=8.0,
                                   ensure_real_root_cone=True)
            alpha = compute_alpha(pencil, seed=seed).alpha
            res = locate_real_eigenvalues(
                pencil, IntervalDelta(lower=alpha + 1e-6 * abs(alpha)), 1e-10,
                alpha_estimate=alpha,
            )
            assert res.n_found >= 1
            report = verify_minmax(pencil, res, random_subspaces=40, seed=seed)
            assert report.ok, report.failures()


class TestGenericEngine:
    def test_fixture_report(self):
        report = generic_engine_fixture_2x2()
        assert report.ok, report.failures()
        by_label = {c.label: c for c in report.checks}
        assert by_label["vector_1_1_negative_root"].data["value"] == pytest.approx(
            (1.0 - np.sqrt(5.0)) / 2.0, abs=1e-12
        )
        assert by_label["vector_2_m1_above_interval"].data["discriminant"] == pytest.approx(-196.0)
        assert by_label["vector_1_m1_no_real_roots"].data["value"] == np.inf

    def test_indefinite_family_form_value(self):
        fam = MatrixQuadraticFamily(
            np.eye(2), np.diag([-2.0, 0.0]), np.array([[1.0, -2.0], [-2.0, 1.0]])
        )
        assert fam.evaluate_form(0.0, [1.0, 1.0]) == -2.0 + 0.0j
        # scalar coefficients reproduce |x|^2, -2|x1|^2, |x|^2 - 4 Re(x1 x2)
        a, b, c = fam.scalar_coefficients([2.0, -1.0])
        assert (a, b, c) == (5.0, -8.0, 13.0)

    def test_reflection_mirrors_counts(self):
        fam = MatrixQuadraticFamily(
            np.zeros((2, 2)), -np.eye(2), np.diag([1.0, 2.0])
        )
        refl = fam.reflected()
        for lam in (-3.0, -1.5, 0.5, 1.5, 3.0):
            assert (
                inertia_negative(fam, lam).negative
                == inertia_negative(refl, -lam).negative
            )

    def test_reflection_on_pencil_family(self, diag_pencil):
        fam = MatrixQuadraticFamily.from_pencil(diag_pencil)
        refl = fam.reflected()
        # eigenvalues of the reflected family are the mirrored pencil roots
        w = np.linalg.eigvalsh(refl.t_matrix(3.0 - SQRT7))
        assert np.min(np.abs(w)) < 1e-10 * np.max(np.abs(w))
