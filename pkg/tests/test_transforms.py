import math

import numpy as np
import pytest

from superstft.quadrature import QuadratureSpec, make_spec
from superstft.signals import (build_signal, custom_window, gaussian_window,
                               hermite_window, shifted_window)
from superstft.special import hermite_function
from superstft.superosc import SuperoscParams
from superstft.transforms import (ComplexGrid, ambiguity, bargmann, convolve,
                                  fourier, inner_product, inverse_fourier,
                                  moyal_double_integral, moyal_inner_product,
                                  reconstruct, spectrogram, stft, stft_grid)

rng = np.random.default_rng(99)

SQRT_PI = math.sqrt(math.pi)
TWO_PI = 2.0 * math.pi


def test_fourier_of_gaussian():
    """F(e^{-t^2/2})(lam) = sqrt(2 pi) e^{-lam^2/2}."""
    g = gaussian_window()
    for lam in (-2.0, 0.0, 0.7, 1.9):
        val = fourier(g, lam)
        assert abs(val - math.sqrt(TWO_PI) * math.exp(-lam * lam / 2.0)) < 1e-13


def test_fourier_eigenrelation():
    """F(h_k) = sqrt(2 pi) (-i)^k h_k."""
    lam = np.linspace(-2.0, 2.0, 9)
    for k in range(5):
        hk = hermite_window(k)
        vals = fourier(hk, lam)
        expect = math.sqrt(TWO_PI) * (-1j) ** k * hermite_function(k, lam)
        np.testing.assert_allclose(vals, expect, atol=1e-12)


def test_inverse_fourier_roundtrip():
    g = gaussian_window()
    fhat = custom_window(lambda lam: fourier(g, lam), decay_radius=9.0)
    for t in (-1.2, 0.0, 0.8):
        assert abs(inverse_fourier(fhat, t) - g(t)) < 1e-12


def test_inner_product_orthogonality():
    h0, h1 = hermite_window(0), hermite_window(1)
    assert abs(inner_product(h0, h1)) < 1e-13
    for k in (0, 1, 3):
        hk = hermite_window(k)
        expect = 2.0**k * math.factorial(k) * SQRT_PI
        assert abs(inner_product(hk, hk) - expect) < 1e-11


def test_stft_gaussian_closed_form():
    """V_phi phi(u, eta) = sqrt(pi) e^{-i u eta / 2} e^{-(u^2+eta^2)/4}."""
    g = gaussian_window()
    for (u, eta) in [(0.0, 0.0), (1.0, -0.5), (-0.7, 2.0)]:
        val = stft(g, g, u, eta)
        expect = (SQRT_PI * np.exp(-0.5j * u * eta)
                  * math.exp(-(u * u + eta * eta) / 4.0))
        assert abs(val - expect) < 1e-13


def test_stft_covariance():
    """V_g(M_w T_y f)(u, eta) = e^{-i y (eta - w)} V_g f(u - y, eta - w)."""
    g = gaussian_window()
    y, w = 0.6, 1.2
    f = shifted_window(g, y, w)
    for (u, eta) in [(0.5, 0.8), (-0.3, 1.5)]:
        lhs = stft(f, g, u, eta)
        rhs = np.exp(-1j * y * (eta - w)) * stft(g, g, u - y, eta - w)
        assert abs(lhs - rhs) < 1e-12


def test_convolve_gaussians():
    """(e^{-t^2/2} * e^{-t^2/2})(lam) = sqrt(pi) e^{-lam^2/4}."""
    g = gaussian_window()
    for lam in (-1.0, 0.0, 2.3):
        val = convolve(g, g, lam)
        assert abs(val - SQRT_PI * math.exp(-lam * lam / 4.0)) < 1e-13


def test_ambiguity_of_gaussian_is_real():
    """A[phi](u, eta) = sqrt(pi) e^{-(u^2 + eta^2)/4}."""
    g = gaussian_window()
    for (u, eta) in [(0.0, 0.0), (1.1, 0.4), (-0.8, -1.3)]:
        val = ambiguity(g, u, eta)
        expect = SQRT_PI * math.exp(-(u * u + eta * eta) / 4.0)
        assert abs(val - expect) < 1e-13


def test_bargmann_of_hermites():
    """B(h_n)(z) = pi^{-1/4} 2^{n/2} z^n."""
    z = 0.8 - 0.3j
    for n in range(4):
        val = bargmann(hermite_window(n), z)
        expect = math.pi ** (-0.25) * 2.0 ** (n / 2.0) * z**n
        assert abs(val - expect) < 1e-12


def test_complex_grid_interpolation():
    u = np.linspace(-1.0, 1.0, 21)
    eta = np.linspace(-2.0, 2.0, 41)
    U, E = np.meshgrid(u, eta, indexing="ij")
    vals = 2.0 * U + 3.0 * E + 1j * U * E  # bilinear, interpolated exactly
    grid = ComplexGrid(u=u, eta=eta, values=vals)
    for (a, b) in [(0.33, -1.17), (-0.91, 0.5), (1.0, 2.0)]:
        got = grid.interp(a, b)
        assert abs(got - (2.0 * a + 3.0 * b + 1j * a * b)) < 1e-12
    with pytest.raises(ValueError):
        grid.interp(1.5, 0.0)


def test_complex_grid_validation():
    with pytest.raises(ValueError):
        ComplexGrid(u=np.array([0.0, 0.0, 1.0]), eta=np.array([0.0, 1.0]),
                    values=np.zeros((3, 2), dtype=complex))
    with pytest.raises(ValueError):
        ComplexGrid(u=np.array([0.0, 1.0]), eta=np.array([0.0, 1.0]),
                    values=np.zeros((3, 2), dtype=complex))


def test_stft_grid_matches_pointwise():
    g = gaussian_window()
    p = SuperoscParams(a=1.5, n=3)
    s = build_signal(g, 0.3, p)
    u = np.linspace(-1.0, 1.0, 5)
    eta = np.linspace(-1.5, 1.5, 4)
    grid = stft_grid(s, g, u, eta)
    for i in (0, 2, 4):
        for j in (0, 3):
            direct = stft(s, g, u[i], eta[j])
            assert abs(grid.values[i, j] - direct) < 1e-12


def test_spectrogram_normalization():
    g = gaussian_window()
    u = np.linspace(-1.0, 1.0, 5)
    grid = stft_grid(g, g, u, u)
    raw = spectrogram(grid)
    normed = spectrogram(grid, g)
    np.testing.assert_allclose(normed * SQRT_PI, raw, rtol=1e-12)
    assert np.all(raw >= 0.0)


def test_moyal_energy_identity():
    """Double phase-space integral of |V_g f|^2 = 2 pi ||f||^2 ||g||^2."""
    g = gaussian_window()
    h1 = hermite_window(1)
    val = moyal_double_integral(h1, g)
    expect = TWO_PI * (2.0 * SQRT_PI) * SQRT_PI
    assert abs(val - expect) < 1e-6 * expect


def test_moyal_mixed_orthogonality():
    """<V_phi h0, V_h1 h1> = 2 pi <h0,h1><h1,phi> = 0."""
    h0, h1, g = hermite_window(0), hermite_window(1), gaussian_window()
    num = moyal_double_integral(h0, g, h1, h1)
    closed = moyal_inner_product(h0, h1, g, h1)
    assert abs(closed) < 1e-12
    assert abs(num - closed) < 1e-8


def test_reconstruct_recovers_signal():
    """Inversion integral returns f pointwise from its transform grid."""
    g = gaussian_window()
    h0 = hermite_window(0)
    axis = np.linspace(-11.0, 11.0, 89)
    grid = stft_grid(h0, g, axis, axis)
    pts = np.array([-1.0, 0.0, 0.7])
    rec = reconstruct(grid, g, pts)
    np.testing.assert_allclose(rec, h0(pts), atol=1e-6)


def test_reconstruct_rejects_undersized_grid():
    g = gaussian_window()
    axis = np.linspace(-2.0, 2.0, 17)  # transform clearly not decayed yet
    grid = stft_grid(g, g, axis, axis)
    with pytest.raises(ValueError):
        reconstruct(grid, g, np.array([0.0]))
