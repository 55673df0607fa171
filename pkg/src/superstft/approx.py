"""STFT of approximating sequences.

The approximating function of a signal psi under the (a, n) coefficient
pattern is

    phi_{psi,n,a}(t) = sum_j C_j(n, a) psi(t + omega_j),

a band-limited-shift average converging to psi(t + a).  Its STFT is
computed two independent ways — through the ambiguity function of the
window and through the 2D-complex Hermite closed form — plus the n -> oo
Gaussian limit.  On the Fourier side the average factorizes exactly:
F(phi_{psi,n,a}) = F(psi) F_n.
"""

import math

import numpy as np

from .signals import custom_window
from .special import SQRT_PI, complex_hermite_2d, ipow
from .superosc import coefficients, f_n, frequencies
from .transforms import ambiguity, fourier

SQRT2 = math.sqrt(2.0)


def approximating_function(psi, p):
    """phi_{psi,n,a} = sum_j C_j psi(. + omega_j) as a custom Window.

    The decay radius inflates by the unit shift plus the coefficient
    growth sum_j |C_j| = max(1, |a|)^n (for Gaussian-type decay)."""
    c = coefficients(p)
    w = frequencies(p)

    def func(t):
        t = np.asarray(t, dtype=float)
        return sum(cj * np.asarray(psi(t + wj), dtype=complex)
                   for cj, wj in zip(c, w))

    r = getattr(psi, "decay_radius", None)
    if r is None:
        radius = None
    else:
        grow = 2.0 * p.n * math.log(max(1.0, abs(p.a)))
        radius = 1.0 + math.ceil(math.sqrt(float(r) ** 2 + grow) + 1.0)
    return custom_window(func, decay_radius=radius)


def apsthm_residual(psi, p, lam, spec=None):
    """Residual of the factorization F(phi_{psi,n,a}) = F(psi) F_n at lam
    (both sides by quadrature; the identity is exact)."""
    phi = approximating_function(psi, p)
    lhs = fourier(phi, lam, spec=spec)
    rhs = fourier(psi, lam, spec=spec) * f_n(p, lam)
    return float(abs(lhs - rhs))


def stft_approx_via_ambiguity(g, p, u, eta, spec=None):
    """V_g(phi_{g,n,a})(u, eta) through the window's ambiguity function:

        e^{-i u eta / 2} sum_j C_j e^{i eta omega_j / 2}
                               A[g](u + omega_j, eta).

    Each time-shifted term folds into one ambiguity evaluation."""
    c = coefficients(p)
    w = frequencies(p)
    total = sum(
        cj * np.exp(0.5j * eta * wj) * ambiguity(g, u + wj, eta, spec=spec)
        for cj, wj in zip(c, w)
    )
    return complex(np.exp(-0.5j * u * eta) * total)


def stft_approx_hermite_closed(k, m, p, u, eta):
    """V_{h_k}(phi_{h_m,n,a})(u, eta) in closed form:

        sqrt(pi) i^{k+m} 2^{(k+m)/2} e^{-eta^2/4 - i u eta / 2}
          sum_j C_j e^{i eta omega_j / 2 - (u + omega_j)^2 / 4}
                H_{k,m}(z_j, w_j),

        z_j = (-eta - i (u + omega_j)) / sqrt2,
        w_j = (-eta + i (u + omega_j)) / sqrt2.

    Constant and H-arguments are the quadrature-confirmed ones (each
    term is the master pair integral at shift -omega_j, frequency -eta);
    stft_approx_hermite_uncalibrated evaluates the variant expression."""
    if k < 0 or m < 0:
        raise ValueError(f"orders must be >= 0, got {(k, m)}")
    c = coefficients(p)
    w = frequencies(p)
    pref = SQRT_PI * ipow(k + m) * 2.0 ** (0.5 * (k + m)) * np.exp(
        -0.25 * eta * eta - 0.5j * u * eta
    )
    total = 0j
    for cj, wj in zip(c, w):
        s = u + wj
        z = (-eta - 1j * s) / SQRT2
        wz = (-eta + 1j * s) / SQRT2
        total += (cj * np.exp(0.5j * eta * wj - 0.25 * s * s)
                  * complex_hermite_2d(k, m, z, wz))
    return complex(pref * total)


def stft_approx_hermite_uncalibrated(k, m, p, u, eta):
    """The variant closed expression

        sqrt(pi / k!) 2^{k/2} e^{-i u eta / 2 - (u^2 + eta^2)/4}
          sum_j C_j e^{-omega_j^2/4 - (u - i eta) omega_j / 2}
                H_{k,m}(z_j, conj(z_j)),

        z_j = ((u + omega_j) + i eta) / sqrt2.

    Same exponential content as the calibrated route but a different
    constant and slot-mirrored H-arguments; kept so tests can pin the
    exact relation between the two."""
    if k < 0 or m < 0:
        raise ValueError(f"orders must be >= 0, got {(k, m)}")
    c = coefficients(p)
    w = frequencies(p)
    pref = (math.sqrt(math.pi / math.factorial(k)) * 2.0 ** (0.5 * k)
            * np.exp(-0.5j * u * eta - 0.25 * (u * u + eta * eta)))
    total = 0j
    for cj, wj in zip(c, w):
        z = ((u + wj) + 1j * eta) / SQRT2
        zbar = ((u + wj) - 1j * eta) / SQRT2
        total += (cj * np.exp(-0.25 * wj * wj - 0.5 * (u - 1j * eta) * wj)
                  * complex_hermite_2d(k, m, z, zbar))
    return complex(pref * total)


def app2_closed(u, eta, a):
    """The n -> oo limit of the Gaussian-window case:

        V_phi(e^{i a .} phi)(u, eta)
            = sqrt(pi) e^{-(u^2 + eta^2 + a^2)/4} e^{-(u - i eta) a / 2}
                       e^{-i u eta / 2}."""
    return complex(
        SQRT_PI
        * np.exp(-0.25 * (u * u + eta * eta + a * a))
        * np.exp(-0.5 * (u - 1j * eta) * a)
        * np.exp(-0.5j * u * eta)
    )
