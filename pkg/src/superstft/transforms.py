"""Time-frequency transforms backed by the quadrature engine.

Conventions (used consistently package-wide):

    fourier:      F(f)(lam) = int e^{-i t lam} f(t) dt
    inverse:      carries the 1/(2 pi)
    stft:         V_g f(u, eta) = int e^{-i t eta} conj(g(t - u)) f(t) dt
    ambiguity:    A[f](x, omega) = e^{i x omega / 2} V_f f(x, omega)
    bargmann:     B(f)(z) = pi^{-3/4} int f(t) e^{-z^2/2 - t^2/2 + sqrt2 z t} dt

With these, the orthogonality relation reads
int int |V_g f|^2 du deta = 2 pi ||f||^2 ||g||^2, and inversion needs
the matching 1/(2 pi ||g||^2) factor.
"""

import math
from dataclasses import dataclass

import numpy as np

from .quadrature import QuadratureSpec, integrate, make_spec, nodes_weights
from .signals import Window, window_norm_sq

TWO_PI = 2.0 * math.pi


def _decay_radius_of(f):
    return getattr(f, "decay_radius", None)


def _resolve_spec(spec, *funcs, shifts=()):
    """Use the given spec, or build one from the functions' decay radii."""
    if spec is not None:
        return spec
    radii = [_decay_radius_of(f) for f in funcs]
    known = [r for r in radii if r is not None]
    if not known:
        raise ValueError(
            "no quadrature spec given and none of the integrand factors "
            "carries a decay_radius"
        )
    return make_spec(max(known), *shifts)


def fourier(f, lam, spec=None):
    """F(f)(lam) = int e^{-i t lam} f(t) dt; lam may be scalar or array."""
    spec = _resolve_spec(spec, f)
    t, w = nodes_weights(spec)
    lam_arr = np.asarray(lam, dtype=float)
    ft = np.asarray(f(t), dtype=complex) * w
    out = ft @ np.exp(-1j * np.multiply.outer(t, lam_arr))
    return complex(out) if lam_arr.ndim == 0 else out


def inverse_fourier(fhat, t, spec=None):
    """(1/2pi) int e^{i t lam} fhat(lam) dlam."""
    spec = _resolve_spec(spec, fhat)
    lam, w = nodes_weights(spec)
    vals = np.asarray(fhat(lam), dtype=complex) * w
    t_arr = np.asarray(t, dtype=float)
    out = vals @ np.exp(1j * np.multiply.outer(lam, t_arr)) / TWO_PI
    return complex(out) if t_arr.ndim == 0 else out


def inner_product(f, g, spec=None):
    """L2 inner product int f(t) conj(g(t)) dt."""
    spec = _resolve_spec(spec, f, g)
    return integrate(lambda t: np.asarray(f(t), dtype=complex)
                     * np.conj(np.asarray(g(t), dtype=complex)), spec)


def stft(f, g, x, omega, spec=None):
    """Short-time Fourier transform
    V_g f(x, omega) = int e^{-i t omega} conj(g(t - x)) f(t) dt."""
    spec = _resolve_spec(spec, f, g, shifts=(x,))
    return integrate(
        lambda t: (np.exp(-1j * omega * t)
                   * np.conj(np.asarray(g(t - x), dtype=complex))
                   * np.asarray(f(t), dtype=complex)),
        spec,
    )


def convolve(f, g, lam, spec=None):
    """(f * g)(lam) = int f(t) g(lam - t) dt."""
    spec = _resolve_spec(spec, f, g, shifts=(lam,))
    return integrate(
        lambda t: np.asarray(f(t), dtype=complex)
        * np.asarray(g(lam - t), dtype=complex),
        spec,
    )


def ambiguity(g, u, eta, spec=None):
    """Ambiguity function A[g](u, eta) = e^{i u eta/2} V_g g(u, eta)
    = int g(t + u/2) conj(g(t - u/2)) e^{-i eta t} dt."""
    return np.exp(0.5j * u * eta) * stft(g, g, u, eta, spec=spec)


def bargmann(f, z, spec=None):
    """Bargmann transform
    B(f)(z) = pi^{-3/4} int f(t) e^{-z^2/2 - t^2/2 + sqrt2 z t} dt,
    normalized so the Hermite function h_n maps to pi^{-1/4} 2^{n/2} z^n."""
    z = complex(z)
    spec = _resolve_spec(spec, f, shifts=(math.sqrt(2.0) * abs(z),))
    val = integrate(
        lambda t: (np.asarray(f(t), dtype=complex)
                   * np.exp(-t * t / 2.0 + math.sqrt(2.0) * z * t)),
        spec,
    )
    return math.pi ** (-0.75) * np.exp(-z * z / 2.0) * val


@dataclass(frozen=True)
class ComplexGrid:
    """Complex values sampled on a rectangular (u, eta) grid.

    u and eta are 1D strictly increasing axes; values has shape
    (len(u), len(eta))."""

    u: np.ndarray
    eta: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        u = np.asarray(self.u, dtype=float)
        eta = np.asarray(self.eta, dtype=float)
        vals = np.asarray(self.values, dtype=complex)
        if u.ndim != 1 or eta.ndim != 1:
            raise ValueError("grid axes must be one-dimensional")
        if np.any(np.diff(u) <= 0) or np.any(np.diff(eta) <= 0):
            raise ValueError("grid axes must be strictly increasing")
        if vals.shape != (u.size, eta.size):
            raise ValueError(
                f"values shape {vals.shape} does not match axes "
                f"({u.size}, {eta.size})"
            )
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "eta", eta)
        object.__setattr__(self, "values", vals)

    def interp(self, uq, eq):
        """Bilinear interpolation at query points (broadcast together).
        Queries outside the grid raise a ValueError."""
        uq = np.asarray(uq, dtype=float)
        eq = np.asarray(eq, dtype=float)
        scalar = uq.ndim == 0 and eq.ndim == 0
        uq, eq = np.broadcast_arrays(np.atleast_1d(uq), np.atleast_1d(eq))
        if (uq.min() < self.u[0] or uq.max() > self.u[-1]
                or eq.min() < self.eta[0] or eq.max() > self.eta[-1]):
            raise ValueError("interpolation query outside the grid coverage")
        iu = np.clip(np.searchsorted(self.u, uq) - 1, 0, self.u.size - 2)
        ie = np.clip(np.searchsorted(self.eta, eq) - 1, 0, self.eta.size - 2)
        du = (uq - self.u[iu]) / (self.u[iu + 1] - self.u[iu])
        de = (eq - self.eta[ie]) / (self.eta[ie + 1] - self.eta[ie])
        v00 = self.values[iu, ie]
        v10 = self.values[iu + 1, ie]
        v01 = self.values[iu, ie + 1]
        v11 = self.values[iu + 1, ie + 1]
        out = ((1 - du) * (1 - de) * v00 + du * (1 - de) * v10
               + (1 - du) * de * v01 + du * de * v11)
        return complex(out[0]) if scalar else out


def stft_grid(f, g, u_axis, eta_axis, spec=None):
    """V_g f on a tensor grid, evaluated as one matrix product:
    row i collects w_t f(t) conj(g(t - u_i)), column j applies e^{-i t eta_j}."""
    u_axis = np.asarray(u_axis, dtype=float)
    eta_axis = np.asarray(eta_axis, dtype=float)
    shift = float(np.max(np.abs(u_axis))) if u_axis.size else 0.0
    spec = _resolve_spec(spec, f, g, shifts=(shift,))
    t, w = nodes_weights(spec)
    a = (w * np.asarray(f(t), dtype=complex)
         * np.conj(np.asarray(g(t[None, :] - u_axis[:, None]), dtype=complex)))
    e = np.exp(-1j * np.multiply.outer(t, eta_axis))
    return ComplexGrid(u=u_axis, eta=eta_axis, values=a @ e)


def spectrogram(grid, g=None):
    """Spectrogram |V_g f|^2 of a sampled STFT grid, divided by ||g||^2
    when the window is supplied (equivalent to unit-normalizing the
    window up front)."""
    out = np.abs(grid.values) ** 2
    if g is not None:
        out = out / window_norm_sq(g)
    return out


def moyal_double_integral(f1, g1, f2=None, g2=None, outer_radius=12.0,
                          outer_nodes_per_unit=16, spec=None):
    """int int V_{g1} f1 (u, eta) conj(V_{g2} f2 (u, eta)) du deta by
    tensor quadrature.  Defaults f2 = f1, g2 = g1 give the energy
    int int |V_g f|^2 = 2 pi ||f||^2 ||g||^2."""
    if f2 is None:
        f2 = f1
    if g2 is None:
        g2 = g1
    outer = QuadratureSpec(truncation_radius=float(outer_radius),
                           nodes_per_unit=int(outer_nodes_per_unit))
    xu, wu = nodes_weights(outer)
    xe, we = nodes_weights(outer)
    v1 = stft_grid(f1, g1, xu, xe, spec=spec).values
    v2 = v1 if (f2 is f1 and g2 is g1) else stft_grid(f2, g2, xu, xe, spec=spec).values
    return complex(wu @ (v1 * np.conj(v2)) @ we)


def moyal_inner_product(f1, f2, g1, g2, spec=None):
    """The closed side of the orthogonality relation:
    2 pi <f1, f2> <g2, g1>, inner products done by quadrature."""
    return TWO_PI * inner_product(f1, f2, spec=spec) * inner_product(g2, g1, spec=spec)


def _axis_weights(axis):
    """Integration weights for a uniform 1D grid: composite Simpson when
    the interval count is even, trapezoid otherwise."""
    n = axis.size
    if n < 2:
        raise ValueError("integration axis needs at least two points")
    h = np.diff(axis)
    if not np.allclose(h, h[0], rtol=1e-12, atol=0.0):
        raise ValueError("integration axis must be uniformly spaced")
    h = float(h[0])
    w = np.full(n, h)
    if (n - 1) % 2 == 0:
        w *= 1.0 / 3.0
        w[1:-1:2] *= 4.0
        w[2:-1:2] *= 2.0
    else:
        w[0] = w[-1] = h / 2.0
    return w


def reconstruct(grid, g, y, spec2d=None):
    """Recover f(y) from its sampled STFT:

        f(y) = 1/(2 pi ||g||^2) int int V_g f(u, eta) e^{i eta y} g(y - u) du deta.

    By default the grid's own nodes serve as quadrature nodes (Simpson
    weights on each axis).  Passing spec2d = (spec_u, spec_eta) switches
    to those quadrature nodes with bilinear interpolation off the grid;
    the spec box must stay inside the grid coverage.
    """
    if isinstance(g, Window):
        norm_sq = window_norm_sq(g)
    else:
        nspec = _resolve_spec(None, g)
        norm_sq = float(integrate(lambda t: np.abs(np.asarray(g(t))) ** 2, nspec).real)
    if not norm_sq > 0.0:
        raise ValueError("window has zero norm; reconstruction is undefined")
    y_arr = np.asarray(y, dtype=float)
    scalar = y_arr.ndim == 0
    y_arr = np.atleast_1d(y_arr)
    if spec2d is None:
        xu, xe = grid.u, grid.eta
        wu = _axis_weights(xu)
        we = _axis_weights(xe)
        vals = grid.values
        mags = np.abs(vals)
        boundary = max(mags[0].max(), mags[-1].max(),
                       mags[:, 0].max(), mags[:, -1].max())
        interior = mags.max()
        if interior > 0.0 and boundary > 1e-6 * interior:
            tail = boundary * 2.0 * ((xu[-1] - xu[0]) + (xe[-1] - xe[0]))
            raise ValueError(
                "grid does not cover the transform's support; estimated "
                f"truncation tail ~ {tail:.3e}"
            )
    else:
        spec_u, spec_eta = spec2d
        xu, wu = nodes_weights(spec_u)
        xe, we = nodes_weights(spec_eta)
        if (xu[0] < grid.u[0] or xu[-1] > grid.u[-1]
                or xe[0] < grid.eta[0] or xe[-1] > grid.eta[-1]):
            raise ValueError("quadrature box exceeds the sampled grid coverage")
        vals = grid.interp(xu[:, None], xe[None, :])
    out = np.empty(y_arr.shape, dtype=complex)
    for i, yi in enumerate(y_arr):
        gwin = np.asarray(g(yi - xu), dtype=complex)
        phase = np.exp(1j * xe * yi)
        out[i] = (wu * gwin) @ vals @ (we * phase)
    out /= TWO_PI * norm_sq
    return complex(out[0]) if scalar else out
