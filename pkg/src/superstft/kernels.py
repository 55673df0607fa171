"""Closed-form kernels and identities.

Everything here ultimately specializes one master integral,

    hermite_pair_integral(k, m, u, x, lam)
        = int e^{i t lam} h_k(t - u) h_m(t - x) dt
        = sqrt(pi) i^{k+m} 2^{(k+m)/2}
          e^{-lam^2/4 + i lam (u+x)/2 - (u-x)^2/4} H_{k,m}(z, w),
    z = (lam - i(u - x))/sqrt2,   w = (lam + i(u - x))/sqrt2,

with H_{k,m} the 2D-complex Hermite polynomials.  Gabor kernels, the
closed-form STFTs of superoscillating signals, Hermite convolutions and
the compact I_{k,m} forms all come out of it by choosing arguments.

Several identities circulate in two variants that differ by exchanging
the two polynomial slots of H_{k,m} (a conjugation for real parameters)
or, equivalently, by a (-1)^{k+m} sign.  Both variants are kept — the
principal names are the ones the quadrature oracles confirm, and the
``*_mirror`` names evaluate the exchanged-slot expressions so tests can
pin the exact relation between them.
"""

import math
from dataclasses import dataclass

import numpy as np

from .quadrature import QuadratureSpec, integrate, make_spec, nodes_weights
from .signals import Window, window_norm_sq
from .special import (
    SQRT_PI,
    complex_hermite_2d,
    generalized_laguerre,
    ipow,
    laguerre,
)
from .superosc import coefficients, f_n, frequencies, supershift_probe

SQRT2 = math.sqrt(2.0)
TWO_PI = 2.0 * math.pi


def _check_finite(**vals):
    for name, v in vals.items():
        if not np.all(np.isfinite(np.asarray(v, dtype=complex))):
            raise ValueError(f"{name} must be finite, got {v}")


@dataclass(frozen=True)
class TFQuadruple:
    """A pair of time-frequency points (x, omega; u, eta): the kernel's
    source point (x, omega) and evaluation point (u, eta)."""

    x: float
    omega: float
    u: float
    eta: float

    def __post_init__(self):
        _check_finite(x=self.x, omega=self.omega, u=self.u, eta=self.eta)


@dataclass(frozen=True)
class FockPoint:
    """A point of the complex phase plane used by the Fock-space forms."""

    z: complex

    def __post_init__(self):
        _check_finite(z=self.z)


def hermite_pair_integral(k, m, u, x, lam):
    """int e^{i t lam} h_k(t - u) h_m(t - x) dt in closed form (see module
    docstring).  u, x real scalars; lam may be a real scalar or array."""
    lam = np.asarray(lam, dtype=float)
    d = u - x
    z = (lam - 1j * d) / SQRT2
    w = (lam + 1j * d) / SQRT2
    out = (SQRT_PI * ipow(k + m) * 2.0 ** ((k + m) / 2.0)
           * np.exp(-lam ** 2 / 4.0 + 0.5j * lam * (u + x) - d * d / 4.0)
           * complex_hermite_2d(k, m, z, w))
    return complex(out) if out.ndim == 0 else out


# ---------------------------------------------------------------------------
# Gabor kernels  K_g(x, omega; u, eta) = <M_omega T_x g, M_eta T_u g>
# ---------------------------------------------------------------------------

def gabor_kernel_numeric(g, q, spec=None):
    """K_g(x, omega; u, eta) = int e^{it(omega - eta)} g(t - x) conj(g(t - u)) dt
    by quadrature; ground truth for the closed forms below."""
    spec = spec or make_spec(g.decay_radius, q.x, q.u)
    lam = q.omega - q.eta
    return integrate(
        lambda t: (np.exp(1j * lam * t) * np.asarray(g(t - q.x), dtype=complex)
                   * np.conj(np.asarray(g(t - q.u), dtype=complex))),
        spec,
    )


def gabor_kernel_gaussian(q):
    """Gaussian-window kernel
    sqrt(pi) e^{(i/2)(u+x)(omega-eta)} e^{-(u-x)^2/4 - (eta-omega)^2/4}."""
    return complex(SQRT_PI
                   * np.exp(0.5j * (q.u + q.x) * (q.omega - q.eta)
                            - (q.u - q.x) ** 2 / 4.0
                            - (q.eta - q.omega) ** 2 / 4.0))


def gabor_kernel_hermite_base(n, q):
    """The Laguerre product gabor_kernel_gaussian(q) * L_n(((x-u)^2 + (omega-eta)^2)/2)
    without the window-norm growth; see gabor_kernel_hermite_calibration."""
    s = ((q.x - q.u) ** 2 + (q.omega - q.eta) ** 2) / 2.0
    return gabor_kernel_gaussian(q) * laguerre(n, s)


def gabor_kernel_hermite_calibration(n):
    """Factor 2^n n! carrying the squared-norm growth of the un-normalized
    Hermite window h_n; fixed by the quadrature oracle."""
    return (2.0 ** n) * math.factorial(n)


def gabor_kernel_hermite(n, q):
    """Hermite-window kernel K_{h_n}(x, omega; u, eta) =
    2^n n! * gabor_kernel_gaussian(q) * L_n(((x-u)^2 + (omega-eta)^2)/2),
    the form the quadrature oracle confirms for un-normalized h_n."""
    return gabor_kernel_hermite_calibration(n) * gabor_kernel_hermite_base(n, q)


# ---------------------------------------------------------------------------
# Closed-form STFTs of superoscillating signals
# ---------------------------------------------------------------------------

def _kernel_dispatch(g, x, u, eta, spec):
    if g.kind == "gaussian":
        return lambda w: gabor_kernel_gaussian(TFQuadruple(x, w, u, eta))
    if g.kind == "hermite":
        return lambda w: gabor_kernel_hermite(g.order, TFQuadruple(x, w, u, eta))
    return lambda w: gabor_kernel_numeric(g, TFQuadruple(x, w, u, eta), spec=spec)


def stft_superosc_closed(g, x, p, u, eta, spec=None):
    """V_g(S)(u, eta) for the signal S = sum_j C_j M_{omega_j} T_x g built on
    the same window g: by linearity this is sum_j C_j K_g(x, omega_j; u, eta).
    Gaussian and Hermite windows use their closed kernels; any other window
    falls back to per-frequency quadrature."""
    kern = _kernel_dispatch(g, x, u, eta, spec)
    return supershift_probe(kern, p)


def stft_superosc_limit(g, x, a, u, eta, spec=None):
    """Large-n limit of stft_superosc_closed: the single kernel value
    K_g(x, a; u, eta) at the superoscillation frequency a."""
    return _kernel_dispatch(g, x, u, eta, spec)(a)


def stft_superosc_cross(k, m, x, p, u, eta):
    """V_{h_k}(S)(u, eta) for the signal built on the *other* Hermite window
    h_m: sum_j C_j int e^{it(omega_j - eta)} h_k(t - u) h_m(t - x) dt, each
    term a hermite_pair_integral."""
    c = coefficients(p)
    w = frequencies(p)
    return complex(sum(
        cj * hermite_pair_integral(k, m, u, x, wj - eta) for cj, wj in zip(c, w)
    ))


def stft_superosc_cross_mirror(k, m, x, p, u, eta):
    """Slot-exchanged variant of stft_superosc_cross; equals
    (-1)^{k+m} * stft_superosc_cross identically."""
    c = coefficients(p)
    w = frequencies(p)
    return complex(sum(
        cj * _pair_integral_mirror(k, m, u, x, wj - eta) for cj, wj in zip(c, w)
    ))


def _pair_integral_mirror(k, m, u, x, lam):
    # sqrt(pi)(-1)^m 2^{(k+m)/2} e^{...} H_{k,m}(alpha, conj-alpha) with
    # alpha = (u - x + i lam)/sqrt2: the exchanged-slot expression
    alpha = (u - x + 1j * lam) / SQRT2
    beta = (u - x - 1j * lam) / SQRT2
    return (SQRT_PI * (-1.0) ** m * 2.0 ** ((k + m) / 2.0)
            * np.exp(-lam ** 2 / 4.0 + 0.5j * (x + u) * lam
                     - (x - u) ** 2 / 4.0)
            * complex_hermite_2d(k, m, alpha, beta))


def stft_superosc_limit_cross(k, m, x, a, u, eta):
    """Large-n limit of stft_superosc_cross: the single pair integral at
    frequency a, i.e. int e^{it(a - eta)} h_k(t-u) h_m(t-x) dt."""
    return hermite_pair_integral(k, m, u, x, a - eta)


def stft_superosc_limit_cross_mirror(k, m, x, a, u, eta):
    """Slot-exchanged variant of the cross-window limit; equals
    (-1)^{k+m} * stft_superosc_limit_cross identically."""
    return complex(_pair_integral_mirror(k, m, u, x, a - eta))


# ---------------------------------------------------------------------------
# Fock-space forms
# ---------------------------------------------------------------------------

def fock_kernel(z, w):
    """Reproducing kernel (1/pi) e^{z conj(w)} of the Gaussian-weighted
    space of entire functions."""
    return complex(np.exp(complex(z) * np.conj(complex(w))) / math.pi)


def normalized_fock_kernel(w, z):
    """Unit-norm kernel element k_w evaluated at z:
    (1/sqrt(pi)) e^{z conj(w) - |w|^2 / 2}."""
    w = complex(w)
    z = complex(z)
    return complex(np.exp(z * np.conj(w) - abs(w) ** 2 / 2.0) / SQRT_PI)


def stft_superosc_fock_form(x, p, u, eta):
    """The Gaussian-window closed STFT reassembled from normalized Fock
    kernel elements:

        pi e^{ux} M_inv sum_j C_j k_{omega_j/sqrt2}(conj(q)/sqrt2),

    q = eta - i(u + x),  M_inv = e^{-eta^2/4 - (u+x)^2/4 - i(u+x)eta/2}.

    Time-frequency data enter the complex plane scaled by 1/sqrt2 (both the
    kernel index omega_j/sqrt2 and the evaluation point conj(q)/sqrt2);
    with that scaling the sum is algebraically identical to
    stft_superosc_closed with the Gaussian window."""
    q = FockPoint(z=eta - 1j * (u + x))
    m_inv = np.exp(-eta ** 2 / 4.0 - (u + x) ** 2 / 4.0 - 0.5j * (u + x) * eta)
    c = coefficients(p)
    w = frequencies(p)
    total = sum(
        cj * normalized_fock_kernel(wj / SQRT2, np.conj(q.z) / SQRT2)
        for cj, wj in zip(c, w)
    )
    return complex(math.pi * np.exp(u * x) * m_inv * total)


def weyl_action_on_basis(a, b, m, z):
    """Action of the phase-space shift operator (the Fock-side conjugate of
    M_b T_a) on the monomial basis element e_m(z) = z^m / sqrt(m! pi):

        (1/sqrt(m! pi)) e^{-(a^2+b^2)/4 + i a b/2}
            e^{z (a + i b)/sqrt2} (z - (a - i b)/sqrt2)^m."""
    if m < 0:
        raise ValueError(f"order must be nonnegative, got {m}")
    z = complex(z)
    return complex(
        np.exp(-(a * a + b * b) / 4.0 + 0.5j * a * b
               + z * (a + 1j * b) / SQRT2)
        * (z - (a - 1j * b) / SQRT2) ** m
        / math.sqrt(math.factorial(m) * math.pi)
    )


# ---------------------------------------------------------------------------
# Norms of the transformed signals
# ---------------------------------------------------------------------------

def norm_sq_closed_gaussian(x, p):
    """Closed double sum
    pi sum_{j,k} C_j C_k e^{-2ix(j-k)/n - (k-j)^2/n^2}; equals
    ||phi||^2 ||S||^2 for the Gaussian window phi and the signal S built on
    it (so the full time-frequency energy is 2 pi times this value)."""
    c = coefficients(p)
    idx = np.arange(p.n + 1)
    d = -np.subtract.outer(idx, idx) / p.n  # d[j, k] = (k - j)/n
    total = complex(math.pi * np.einsum(
        "j,k,jk->", c, c, np.exp(-d ** 2 + 2j * d * x)))
    if abs(total.imag) > 1e-12 * max(1.0, abs(total.real)):
        raise FloatingPointError(f"norm sum came out non-real: {total}")
    return float(total.real)


def phi_na_norm(x, p, spec=None):
    """(1/sqrt(pi)) int |phi_na(s)|^2 e^{-s^2} ds by quadrature, with
    phi_na(s) = sum_l C_l e^{-2 l^2/n^2 + (2l/n)(s - ix)}.  Equals
    norm_sq_closed_gaussian(x, p)/pi — the Gaussian-weighted 1D avatar of
    the time-frequency energy."""
    spec = spec or QuadratureSpec(truncation_radius=12.0)
    c = coefficients(p)
    l = np.arange(p.n + 1)
    amp = c * np.exp(-2.0 * l ** 2 / p.n ** 2 - (2.0 * l / p.n) * 1j * x)

    def phi(s):
        return np.tensordot(amp, np.exp(np.multiply.outer(2.0 * l / p.n, s)),
                            axes=(0, 0))

    def integrand(s):
        v = phi(s)
        return np.abs(v) ** 2 * np.exp(-s * s)

    return float(integrate(integrand, spec).real) / SQRT_PI


def norm_sq_closed_hermite(k, m, x, p):
    """Closed double sum for the Hermite pair (analysis window h_k, signal
    built on h_m):

        (-1)^m 2^{m+k} k! pi sum_{s,l} C_s C_l e^{-(s-l)^2/n^2}
            e^{2i(s-l)x/n} H_{m,m}(sqrt2 (s-l)/n, sqrt2 (s-l)/n).

    Equals ||h_k||^2 ||S||^2 (time-frequency energy again 2 pi times this).
    Returned as a real number; diagonal terms use H_{m,m}(0,0) = (-1)^m m!
    directly."""
    if k < 0 or m < 0:
        raise ValueError(f"orders must be nonnegative, got ({k}, {m})")
    c = coefficients(p)
    idx = np.arange(p.n + 1)
    d = np.subtract.outer(idx, idx) / p.n  # d[s, l] = (s - l)/n
    h = complex_hermite_2d(m, m, SQRT2 * d, SQRT2 * d)
    h[np.diag_indices_from(h)] = (-1.0) ** m * math.factorial(m)
    total = complex(
        (-1.0) ** m * 2.0 ** (m + k) * math.factorial(k) * math.pi
        * np.einsum("s,l,sl->", c, c, np.exp(-d ** 2 + 2j * d * x) * h)
    )
    if abs(total.imag) > 1e-12 * max(1.0, abs(total.real)):
        raise FloatingPointError(f"norm sum came out non-real: {total}")
    return float(total.real)


# ---------------------------------------------------------------------------
# Hermite convolutions and the compact pair-integral polynomial
# ---------------------------------------------------------------------------

def hermite_convolution_closed(k, m, x, u, lam):
    """Convolution of modulated Hermite functions
    (M_x h_k * M_u h_m)(lam) in closed form:

        sqrt(pi) i^{k-m} 2^{(k+m)/2} e^{-lam^2/4 + i lam (x+u)/2 - (x-u)^2/4}
            H_{k,m}((x - u + i lam)/sqrt2, (x - u - i lam)/sqrt2).

    This is the variant the convolution quadrature confirms."""
    z = (x - u + 1j * lam) / SQRT2
    w = (x - u - 1j * lam) / SQRT2
    return complex(SQRT_PI * ipow(k - m) * 2.0 ** ((k + m) / 2.0)
                   * np.exp(-lam ** 2 / 4.0 + 0.5j * lam * (x + u)
                            - (x - u) ** 2 / 4.0)
                   * complex_hermite_2d(k, m, z, w))


def hermite_convolution_mirror(k, m, x, u, lam):
    """Slot-exchanged variant
    sqrt(pi) i^{m-k} 2^{(k+m)/2} e^{...} H_{k,m}((u-x+i lam)/sqrt2, (u-x-i lam)/sqrt2);
    for real parameters this is the conjugate-polynomial evaluation and
    coincides with hermite_convolution_closed exactly when k = m."""
    z = (u - x + 1j * lam) / SQRT2
    w = (u - x - 1j * lam) / SQRT2
    return complex(SQRT_PI * ipow(m - k) * 2.0 ** ((k + m) / 2.0)
                   * np.exp(-lam ** 2 / 4.0 + 0.5j * lam * (x + u)
                            - (x - u) ** 2 / 4.0)
                   * complex_hermite_2d(k, m, z, w))


def hermite_autoconvolution(k, m, lam):
    """(h_k * h_m)(lam) = sqrt(pi) 2^{(k+m)/2} e^{-lam^2/4}
    H_{k,m}(lam/sqrt2, lam/sqrt2) — the unmodulated x = u = 0 case."""
    lam = np.asarray(lam, dtype=float)
    out = (SQRT_PI * 2.0 ** ((k + m) / 2.0) * np.exp(-lam ** 2 / 4.0)
           * complex_hermite_2d(k, m, lam / SQRT2, lam / SQRT2))
    return complex(out) if out.ndim == 0 else out


def i_km_series(k, m, x, u, lam):
    """The pair-integral polynomial I_{k,m} as a finite series:

        sum_{l=0}^{m} 2^{(k+l)/2} i^{k+l} C(m,l) (2(x-u))^{m-l}
            H_{k,l}(beta, beta),   beta = (lam + i(x-u))/sqrt2.

    Defined so that sqrt(pi) e^{-lam^2/4 + i lam (x+u)/2 - (x-u)^2/4} I_{k,m}
    equals int e^{it lam} h_k(t-x) h_m(t-u) dt.  Accepts complex x, u, lam
    (it is a polynomial identity)."""
    x = complex(x)
    u = complex(u)
    lam = complex(lam)
    beta = (lam + 1j * (x - u)) / SQRT2
    total = 0.0 + 0.0j
    for l in range(m + 1):
        total += (2.0 ** ((k + l) / 2.0) * ipow(k + l) * math.comb(m, l)
                  * (2.0 * (x - u)) ** (m - l)
                  * complex_hermite_2d(k, l, beta, beta))
    return complex(total)


def i_km_closed(k, m, x, u, lam):
    """Compact closed form of the same polynomial:
    (-1)^m 2^{(k+m)/2} H_{k,m}((u - x - i lam)/sqrt2, (u - x + i lam)/sqrt2);
    identical to i_km_series for all (complex) arguments."""
    x = complex(x)
    u = complex(u)
    lam = complex(lam)
    z = (u - x - 1j * lam) / SQRT2
    w = (u - x + 1j * lam) / SQRT2
    return complex((-1.0) ** m * 2.0 ** ((k + m) / 2.0)
                   * complex_hermite_2d(k, m, z, w))


def i_km_mirror(k, m, x, u, lam):
    """Slot-exchanged compact form
    (-1)^m 2^{(k+m)/2} H_{k,m}((u - x + i lam)/sqrt2, (u - x - i lam)/sqrt2);
    conjugate evaluation of i_km_closed for real arguments, equal to it
    exactly when k = m."""
    x = complex(x)
    u = complex(u)
    lam = complex(lam)
    z = (u - x + 1j * lam) / SQRT2
    w = (u - x - 1j * lam) / SQRT2
    return complex((-1.0) ** m * 2.0 ** ((k + m) / 2.0)
                   * complex_hermite_2d(k, m, z, w))


# ---------------------------------------------------------------------------
# Generating-sum checks
# ---------------------------------------------------------------------------

def generating_sum_check(x, u, v, lam, K):
    """Pair (LHS, RHS) of the modulated-convolution generating identity:

        LHS = sum_{k,m <= K} u^k v^m / (2^{(k+m)/2} k! m!) (M_x h_k * M_x h_m)(lam)
        RHS = sqrt(pi) e^{-lam^2/4 + lam (i x + (u+v)/sqrt2)} e^{-uv}.

    The truncated LHS converges to the RHS for |u|, |v| <= 1."""
    u = complex(u)
    v = complex(v)
    lhs = 0.0 + 0.0j
    for k in range(K + 1):
        for m in range(K + 1):
            lhs += (u ** k * v ** m
                    / (2.0 ** ((k + m) / 2.0)
                       * math.factorial(k) * math.factorial(m))
                    * hermite_convolution_closed(k, m, x, x, lam))
    rhs = complex(SQRT_PI * np.exp(-lam ** 2 / 4.0
                                   + lam * (1j * x + (u + v) / SQRT2)
                                   - u * v))
    return lhs, rhs


def generating_product_check(x, u, v, lam, K):
    """Pair (LHS, RHS) of the pointwise Hermite-product generating identity
    (Fourier side of generating_sum_check):

        LHS = 2 pi sum_{k,m <= K} u^k v^m / (2^{(k+m)/2} k! m!)
                  (-i)^{k+m} h_k(lam - x) h_m(lam - x)
        RHS = 2 pi e^{-uv - (x-lam)^2 + (u+v)^2/2 + sqrt2 i (x-lam)(u+v)}.

    The 2 pi carries the Fourier-pairing normalization of this library's
    transform convention."""
    from .special import hermite_function

    u = complex(u)
    v = complex(v)
    s = lam - x
    lhs = 0.0 + 0.0j
    for k in range(K + 1):
        for m in range(K + 1):
            lhs += (u ** k * v ** m
                    / (2.0 ** ((k + m) / 2.0)
                       * math.factorial(k) * math.factorial(m))
                    * ipow(-(k + m))
                    * hermite_function(k, s) * hermite_function(m, s))
    lhs *= TWO_PI
    rhs = complex(TWO_PI * np.exp(-u * v - s * s + (u + v) ** 2 / 2.0
                                  - SQRT2 * 1j * s * (u + v)))
    return lhs, rhs


# ---------------------------------------------------------------------------
# Integral representation of the superoscillating pointwise values
# ---------------------------------------------------------------------------

def _gaussian_kernel_grid(x, omega, ugrid, egrid):
    return (SQRT_PI * np.exp(0.5j * (ugrid + x) * (omega - egrid)
                             - (ugrid - x) ** 2 / 4.0
                             - (egrid - omega) ** 2 / 4.0))


def _hermite_kernel_grid(mwin, x, omega, ugrid, egrid):
    s = ((x - ugrid) ** 2 + (omega - egrid) ** 2) / 2.0
    return (gabor_kernel_hermite_calibration(mwin)
            * _gaussian_kernel_grid(x, omega, ugrid, egrid)
            * generalized_laguerre(mwin, 0, s))


def stft_integral_representation(g, x, y, p, spec2d=None):
    """Recover the superoscillating pointwise value F_n(y) from the closed
    STFT by the inversion integral:

        (1/(2 pi g(y - x) ||g||^2))
            int int V_g(S)(u, eta) e^{i eta y} g(y - u) du deta,

    which reproduces F_n(y) because S(y) = F_n(y) g(y - x).  Needs
    g(y - x) != 0 and a window with a closed-form kernel."""
    if not isinstance(g, Window) or g.kind not in ("gaussian", "hermite"):
        raise ValueError("integral representation needs a Gaussian or Hermite window")
    denom = complex(np.asarray(g(y - x), dtype=complex))
    if abs(denom) < 1e-12:
        raise ValueError(f"window vanishes at y - x = {y - x}; "
                         "the representation divides by g(y - x)")
    if spec2d is None:
        spec_u = QuadratureSpec(truncation_radius=14.0 + abs(x) + abs(y),
                                nodes_per_unit=16)
        spec_eta = QuadratureSpec(truncation_radius=16.0, nodes_per_unit=16)
    else:
        spec_u, spec_eta = spec2d
    xu, wu = nodes_weights(spec_u)
    xe, we = nodes_weights(spec_eta)
    ugrid = xu[:, None]
    egrid = xe[None, :]
    c = coefficients(p)
    w = frequencies(p)
    if g.kind == "gaussian":
        phi = sum(cj * _gaussian_kernel_grid(x, wj, ugrid, egrid)
                  for cj, wj in zip(c, w))
    else:
        phi = sum(cj * _hermite_kernel_grid(g.order, x, wj, ugrid, egrid)
                  for cj, wj in zip(c, w))
    integrand = phi * np.asarray(g(y - ugrid), dtype=complex) * np.exp(1j * egrid * y)
    val = wu @ integrand @ we
    return complex(val / (TWO_PI * denom * window_norm_sq(g)))


def f_n_from_representation_target(p, y):
    """Convenience oracle: the pointwise value F_n(y) the representation
    should reproduce."""
    return f_n(p, y)


def stft_superosc_closed_grid(g, x, p, u_axis, eta_axis):
    """stft_superosc_closed on a tensor grid, shape (len(u), len(eta)).
    Closed kernels only, so the window must be gaussian or hermite."""
    u_axis = np.asarray(u_axis, dtype=float)
    eta_axis = np.asarray(eta_axis, dtype=float)
    ug = u_axis[:, None]
    eg = eta_axis[None, :]
    c = coefficients(p)
    w = frequencies(p)
    if g.kind == "gaussian":
        kern = lambda wj: _gaussian_kernel_grid(x, wj, ug, eg)
    elif g.kind == "hermite":
        kern = lambda wj: _hermite_kernel_grid(g.order, x, wj, ug, eg)
    else:
        raise ValueError("closed kernel grids need a gaussian or hermite window")
    return sum(cj * kern(float(wj)) for cj, wj in zip(c, w))


def stft_superosc_limit_grid(g, x, a, u_axis, eta_axis):
    """The limit-signal kernel K_g(x, a; u, eta) on a tensor grid."""
    u_axis = np.asarray(u_axis, dtype=float)
    eta_axis = np.asarray(eta_axis, dtype=float)
    ug = u_axis[:, None]
    eg = eta_axis[None, :]
    if g.kind == "gaussian":
        return _gaussian_kernel_grid(x, a, ug, eg)
    if g.kind == "hermite":
        return _hermite_kernel_grid(g.order, x, a, ug, eg)
    raise ValueError("closed kernel grids need a gaussian or hermite window")
