import numpy as np
import pytest

import zerofilter as zf
from zerofilter.constructions import _smooth_step
from zerofilter.errors import ResolutionExceeded, ValidationError


@pytest.fixture(scope="module")
def grid():
    return zf.Grid(8192, 16.0)


@pytest.fixture(scope="module")
def phi(grid):
    return zf.build_phi(grid)


class TestSmoothStep:
    def test_endpoints(self):
        assert _smooth_step(np.array([-1.0, 0.0]))[0] == 1.0
        assert _smooth_step(np.array([1.0, 2.0]))[1] == 0.0

    def test_decreasing(self):
        t = np.linspace(0.0, 1.0, 101)
        v = _smooth_step(t)
        assert v[0] == 1.0 and v[-1] == 0.0
        assert np.all(np.diff(v) <= 0)

    def test_midpoint_symmetry(self):
        # h(1-t)/(h(t)+h(1-t)) has the symmetry S(t) + S(1-t) = 1
        t = np.linspace(0.05, 0.95, 19)
        assert np.max(np.abs(_smooth_step(t) + _smooth_step(1.0 - t) - 1.0)) < 1e-12


class TestBumpProfile:
    def test_plateau_and_support(self):
        prof = zf.BumpProfile()
        xi = np.array([0.0, 0.2, 0.25, 0.3, 0.5, 0.7, -0.3])
        v = prof(xi)
        assert v[0] == 1.0 and v[1] == 1.0 and v[2] == 1.0
        assert 0.0 < v[3] < 1.0
        assert v[4] == 0.0 and v[5] == 0.0
        assert v[6] == v[3]  # even

    def test_bad_radii(self):
        with pytest.raises(ValidationError):
            zf.BumpProfile(flat_radius=0.5, support_radius=0.5)


class TestBuildPhi:
    def test_center_value_window(self, phi, grid):
        center = float(phi.samples[grid.num_points // 2])
        assert 0.5 / (2.0 * np.pi) <= center <= 1.0 / (2.0 * np.pi)

    def test_norms_are_order_one(self, phi):
        assert zf.sobolev_norm(phi, 0.0) == pytest.approx(0.3346, abs=2e-3)
        assert zf.sobolev_norm(phi, 2.0) == pytest.approx(0.3491, abs=2e-3)

    def test_spectral_support(self, phi, grid):
        outside = np.abs(grid.frequencies) >= 0.5
        assert np.max(np.abs(phi.spectrum[outside])) == 0.0

    def test_boundary_decay(self, phi):
        peak = zf.sup_norm(phi)
        assert abs(float(phi.samples[0])) <= 1e-8 * peak

    def test_coarse_frequency_lattice_rejected(self):
        # L = 1 gives frequency spacing 1, too coarse for the bump
        with pytest.raises(ResolutionExceeded):
            zf.build_phi(zf.Grid(256, 1.0))


class TestSequenceIndex:
    def test_values(self):
        idx = zf.SequenceIndex(4)
        assert idx.alpha_n == 2.0 ** -4
        assert idx.center_frequency == pytest.approx((17.0 / 12.0) * 16.0)

    def test_band_validation(self, grid):
        zf.SequenceIndex(4).validate(zf.Grid(32768, 16.0))
        with pytest.raises(ResolutionExceeded) as exc_info:
            zf.SequenceIndex(9).validate(zf.Grid(32768, 16.0))
        assert "n=9" in str(exc_info.value)

    def test_bad_index(self, grid):
        with pytest.raises(ResolutionExceeded):
            zf.SequenceIndex(0).validate(grid)


class TestFamilies:
    def test_f_norm_scaling(self, grid, phi):
        s = 2.0
        idx4 = zf.SequenceIndex(4)
        idx5 = zf.SequenceIndex(5)
        f4 = zf.build_fn(grid, idx4, s)
        f5 = zf.build_fn(grid, idx5, s)
        # H^s norms of the family are comparable across n
        assert zf.sobolev_norm(f5, s) / zf.sobolev_norm(f4, s) == pytest.approx(1.0, abs=0.05)
        # one derivative up scales by 2
        r = (zf.sobolev_norm(f5, s + 1.0) / zf.sobolev_norm(f4, s + 1.0))
        assert r == pytest.approx(2.0, rel=0.05)

    def test_f_spectral_annulus(self, grid):
        idx = zf.SequenceIndex(5)
        f = zf.build_fn(grid, idx, 2.0)
        a = idx.center_frequency
        outside = np.abs(np.abs(grid.frequencies) - a) > 0.5 + 1e-12
        total = float(np.sum(np.abs(f.spectrum) ** 2))
        assert float(np.sum(np.abs(f.spectrum[outside]) ** 2)) / total < 1e-24

    def test_g_is_scaled_phi(self, grid, phi):
        g5 = zf.build_gn(grid, phi, zf.SequenceIndex(5))
        assert np.max(np.abs(g5.samples - phi.samples / 32.0)) < 1e-15

    def test_u0_is_sum(self, grid, phi):
        idx = zf.SequenceIndex(4)
        u0 = zf.build_u0n(grid, idx, 2.0, phi=phi)
        f = zf.build_fn(grid, idx, 2.0)
        g = zf.build_gn(grid, phi, idx)
        assert np.max(np.abs(u0.samples - f.samples - g.samples)) < 1e-15


class TestProductSupport:
    def test_report_passes(self, grid, phi):
        idx = zf.SequenceIndex(4)
        f = zf.build_fn(grid, idx, 2.0)
        g = zf.build_gn(grid, phi, idx)
        report = zf.check_product_support(idx, g, f, 2.0)
        assert report.passed
        assert report.outside_mass_fraction <= report.tolerance
        assert report.product_norm > 0.01
        assert report.annulus_lo == pytest.approx(idx.center_frequency - 1.0)
        assert report.annulus_hi == pytest.approx(idx.center_frequency + 1.0)
