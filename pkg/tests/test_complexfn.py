import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from galpha.complexfn import (DiskGrid, DomainError, NormEstimate,
                              cauchy_coefficients, default_grid,
                              principal_power, sup_norm_estimate, worker_count)


class TestPrincipalPower:
    def test_identity_base(self):
        assert principal_power(1.0 + 0.0j, 0.5) == pytest.approx(1.0)

    def test_real_positive_base_unit_exponent(self):
        assert principal_power(2.0 + 0.0j, 1.0) == pytest.approx(2.0)

    def test_against_multiprecision_oracle(self):
        # mpmath, 40 digits: exp(0.25*log(1-0.5j))
        expected = 1.021385523951732499 - 0.11892381974360307767j
        assert principal_power(1.0 - 0.5j, 0.25) == pytest.approx(expected, abs=1e-15)

    def test_rejects_left_half_plane(self):
        with pytest.raises(DomainError):
            principal_power(-1.0 + 0.5j, 0.5)
        with pytest.raises(DomainError):
            principal_power(0.0 + 1.0j, 0.5)

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            principal_power(complex(np.nan, 0.0), 0.5)

    def test_vectorized(self):
        z = np.array([1.0 + 0.0j, 2.0 + 1.0j])
        out = principal_power(z, 2.0)
        assert np.allclose(out, z ** 2)

    @settings(max_examples=200, deadline=None)
    @given(re=st.floats(0.05, 2.0), im=st.floats(-2.0, 2.0),
           e1=st.floats(-2.0, 2.0), e2=st.floats(-2.0, 2.0))
    def test_exponent_additivity(self, re, im, e1, e2):
        # 1e-12 is read relative to the result scale, which reaches ~4e3 here
        b = complex(re, im)
        lhs = principal_power(b, e1 + e2)
        rhs = principal_power(b, e1) * principal_power(b, e2)
        assert abs(lhs - rhs) < 1e-12 * max(1.0, abs(lhs))


class TestCauchyCoefficients:
    def test_linear_polynomial_exact(self):
        c = cauchy_coefficients(lambda z: 1.0 - z, 2)
        assert np.max(np.abs(c - np.array([1.0, -1.0, 0.0]))) < 1e-12

    def test_zero_function(self):
        c = cauchy_coefficients(lambda z: np.zeros_like(z), 4)
        assert np.max(np.abs(c)) < 1e-14

    def test_square_root_binomial_series(self):
        # (1-z)^(1/2) = 1 - z/2 - z^2/8 - z^3/16 - ...
        c = cauchy_coefficients(lambda z: (1.0 - z) ** 0.5, 3)
        expected = np.array([1.0, -0.5, -0.125, -0.0625])
        assert np.max(np.abs(c - expected)) < 1e-13

    def test_degree_d_polynomial_reproduced(self):
        coeffs = np.array([0.3, -1.2, 0.0, 0.7, 2.0 - 1.0j, -0.25])
        f = lambda z: np.polynomial.polynomial.polyval(z, coeffs)
        c = cauchy_coefficients(f, 9)
        assert np.max(np.abs(c[:6] - coeffs)) < 1e-12
        assert np.max(np.abs(c[6:])) < 1e-10

    def test_invalid_arguments(self):
        f = lambda z: z
        with pytest.raises(ValueError):
            cauchy_coefficients(f, 8, samples=16)
        with pytest.raises(ValueError):
            cauchy_coefficients(f, 2, radius=1.2)
        with pytest.raises(ValueError):
            cauchy_coefficients(f, 0)

    def test_scalar_only_callable_falls_back(self):
        c = cauchy_coefficients(lambda z: complex(z) ** 2, 3, samples=64)
        assert np.max(np.abs(c - np.array([0, 0, 1.0, 0]))) < 1e-12


class TestDiskGrid:
    def test_default_shape(self):
        grid = default_grid()
        assert grid.radii.size == 64
        assert grid.angles_per_circle == 512
        assert grid.r_max == pytest.approx(1.0 - 1e-4)
        assert grid.points().shape == (512, 64)

    def test_validation(self):
        with pytest.raises(ValueError):
            DiskGrid(radii=np.array([0.5, 0.2]), angles_per_circle=16, r_max=0.9)
        with pytest.raises(ValueError):
            DiskGrid(radii=np.array([0.1, 0.5]), angles_per_circle=4, r_max=0.9)
        with pytest.raises(ValueError):
            DiskGrid(radii=np.array([0.1, 0.5]), angles_per_circle=16, r_max=1.0)

    def test_norm_estimate_argmax_in_disk(self):
        grid = default_grid()
        with pytest.raises(ValueError):
            NormEstimate(value=1.0, argmax=1.0 + 0.0j, grid=grid, refined=False)


class TestSupNormEstimate:
    def test_constant_objective(self):
        est = sup_norm_estimate(lambda z: np.ones(z.shape), default_grid())
        assert est.value == pytest.approx(1.0)
        assert abs(est.argmax) < 1.0

    def test_pre_schwarzian_objective_of_linear_hprime(self):
        # (1-|z|^2) * |1/(1-z)| = 1+r along the positive axis, so the sup over
        # |z| <= 0.999 is exactly 2 - 1e-3; the slack covers cancellation dust
        grid = default_grid(boundary_gap=1e-3)
        obj = lambda z: (1.0 - np.abs(z) ** 2) * np.abs(-1.0 / (1.0 - z))
        est = sup_norm_estimate(obj, grid)
        assert est.value == pytest.approx(2.0, abs=1e-3 + 1e-10)

    def test_schwarzian_objective_of_linear_hprime(self):
        # (1-|z|^2)^2 * (3/2)/|1-z|^2 -> sup 6 (the classical sharp value)
        obj = lambda z: (1.0 - np.abs(z) ** 2) ** 2 * 1.5 / np.abs(1.0 - z) ** 2
        est = sup_norm_estimate(obj, default_grid())
        assert est.value == pytest.approx(6.0, abs=1e-3)
        assert est.refined

    def test_value_matches_objective_at_argmax(self):
        obj = lambda z: (1.0 - np.abs(z) ** 2) * np.abs(-1.0 / (1.0 - z))
        est = sup_norm_estimate(obj, default_grid())
        assert est.value == pytest.approx(float(obj(np.asarray(est.argmax))), abs=1e-12)

    def test_monotone_in_grid_density(self):
        obj = lambda z: (1.0 - np.abs(z) ** 2) ** 2 * 1.5 / np.abs(1.0 - 0.93j * z) ** 2
        radii = 1.0 - np.geomspace(1.0, 1e-4, 33)
        radii[0] = 0.0
        sparse = DiskGrid(radii=radii[::2], angles_per_circle=64,
                          r_max=float(radii[-1]))
        dense = DiskGrid(radii=radii, angles_per_circle=128,
                         r_max=float(radii[-1]))
        v_sparse = sup_norm_estimate(obj, sparse, refine_iters=0).value
        v_dense = sup_norm_estimate(obj, dense, refine_iters=0).value
        assert v_dense >= v_sparse  # dense points are a superset
        r_sparse = sup_norm_estimate(obj, sparse).value
        r_dense = sup_norm_estimate(obj, dense).value
        assert r_dense >= r_sparse - 1e-12

    def test_refinement_never_below_grid_max(self):
        obj = lambda z: (1.0 - np.abs(z) ** 2) ** 2 / np.abs(1.0 - z * np.exp(-0.7j)) ** 2
        grid = default_grid()
        coarse = sup_norm_estimate(obj, grid, refine_iters=0)
        refined = sup_norm_estimate(obj, grid)
        assert refined.value >= coarse.value


class TestWorkerCount:
    def test_explicit(self, monkeypatch):
        monkeypatch.setenv("GALPHA_THREADS", "4")
        assert worker_count() == 4

    def test_auto(self, monkeypatch):
        monkeypatch.setenv("GALPHA_THREADS", "0")
        assert worker_count() >= 1
        monkeypatch.delenv("GALPHA_THREADS")
        assert worker_count() >= 1

    def test_invalid(self, monkeypatch):
        monkeypatch.setenv("GALPHA_THREADS", "many")
        with pytest.raises(ValueError):
            worker_count()

    def test_parallel_sweep_matches_serial(self, monkeypatch):
        obj = lambda z: (1.0 - np.abs(z) ** 2) * np.abs(1.0 / (1.0 - 0.99 * z))
        grid = default_grid(n_radii=16, angles_per_circle=64)
        monkeypatch.setenv("GALPHA_THREADS", "1")
        serial = sup_norm_estimate(obj, grid, refine_iters=0)
        monkeypatch.setenv("GALPHA_THREADS", "3")
        parallel = sup_norm_estimate(obj, grid, refine_iters=0)
        assert parallel.value == serial.value
        assert parallel.argmax == serial.argmax
