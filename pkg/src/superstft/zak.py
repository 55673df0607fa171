"""Truncated Zak transform, theta-function bounds, and Gabor-frame verdicts.

The Zak transform here is the alpha = 1 normalization

    Z(f)(u, eta) = sum_k f(u - k) e^{i k eta},

periodic in eta with period 2 pi (hence the fundamental domain
[0, 1] x [0, 2 pi]) and quasi-periodic in u: Z(u+1, eta) = e^{i eta} Z(u, eta).
Other lattice parameters would require pre-scaling the signal and are
not implemented.

The sum is truncated where the evaluator's decay radius puts the tail
below 1e-16, so every evaluator passed in must carry a ``decay_radius``
attribute (Window and Signal both do).

Frame verdicts are sampling-based: a grid scan of |Z| on the fundamental
domain can certify a positive minimum (Frame) or confirm a near-zero
under refinement (NotFrame), but a grid can also alias a true zero, so
anything else stays Inconclusive.
"""

import math
from dataclasses import dataclass

import numpy as np

from .signals import build_signal, gaussian_window
from .special import theta
from .superosc import coefficients, frequencies

TWO_PI = 2.0 * math.pi

# default |Z| threshold separating "bounded below" from "numerically zero"
FRAME_TOLERANCE = 1e-8


def _truncation_order(f, u_max):
    r = getattr(f, "decay_radius", None)
    if r is None:
        raise ValueError(
            "zak transform needs an evaluator with a decay_radius attribute "
            "to truncate the lattice sum"
        )
    return int(math.ceil(float(r) + abs(float(u_max)))) + 2


def zak(f, u, eta):
    """Z(f)(u, eta) = sum_{|k| <= K} f(u - k) e^{i k eta}, K chosen from
    the evaluator's decay radius so dropped terms are below 1e-16."""
    kmax = _truncation_order(f, u)
    k = np.arange(-kmax, kmax + 1)
    vals = np.asarray(f(u - k), dtype=complex)
    return complex(vals @ np.exp(1j * k * eta))


def zak_grid(f, u_axis, eta_axis):
    """Z(f) sampled on a tensor grid, shape (len(u_axis), len(eta_axis))."""
    u_axis = np.asarray(u_axis, dtype=float)
    eta_axis = np.asarray(eta_axis, dtype=float)
    kmax = _truncation_order(f, np.max(np.abs(u_axis)) if u_axis.size else 0.0)
    k = np.arange(-kmax, kmax + 1)
    a = np.asarray(f(u_axis[:, None] - k[None, :]), dtype=complex)
    e = np.exp(1j * np.multiply.outer(k, eta_axis))
    return a @ e


def zak_gaussian(u, eta):
    """Closed expression for the Gaussian window's Zak transform,

        Z(e^{-t^2/2})(u, eta) = e^{-u^2/2} theta((eta - i u)/(2 pi), i/(2 pi)),

    i.e. the defining sum resummed as a Jacobi theta value."""
    z = (eta - 1j * u) / TWO_PI
    return complex(math.exp(-0.5 * u * u) * theta(z, 1j / TWO_PI))


def zak_shift_identity_check(f, x, omega, u, eta):
    """Residual |Z(T_x M_omega f)(u, eta) - e^{i omega (u - x)} Z(f)(u - x, eta - omega)|.

    The identity is exact; the residual measures truncation/rounding only.
    """
    r = getattr(f, "decay_radius", None)
    if r is None:
        raise ValueError(
            "zak transform needs an evaluator with a decay_radius attribute "
            "to truncate the lattice sum"
        )

    def shifted(t):
        t = np.asarray(t, dtype=float)
        return np.exp(1j * omega * (t - x)) * np.asarray(f(t - x), dtype=complex)

    shifted.decay_radius = float(r) + abs(x)
    lhs = zak(shifted, u, eta)
    rhs = np.exp(1j * omega * (u - x)) * zak(f, u - x, eta - omega)
    return float(abs(lhs - rhs))


def zak_superosc(g, x, p, u, eta):
    """Zak transform of the modulated signal F_n(t) g(t - x) by the
    frequency-shift rule applied termwise:

        Z(S)(u, eta) = sum_j C_j e^{i omega_j u} Z(g)(u - x, eta - omega_j).

    Equals zak(build_signal(g, x, p))(u, eta) up to truncation error."""
    c = coefficients(p)
    w = frequencies(p)
    return complex(sum(
        cj * np.exp(1j * wj * u) * zak(g, u - x, eta - wj)
        for cj, wj in zip(c, w)
    ))


def theta_bound_check(p, u, eta):
    """For the Gaussian-window signal F_n(t) e^{-t^2/2}, returns the pair

        (|Z(S)(u, eta)|,  (1+a)^n e^{-u^2/2} theta(-i u / 2 pi, i / 2 pi)),

    where the theta value resums sum_k e^{-k^2/2 + k u}.  The first
    component never exceeds the second (for a > 0)."""
    sig = build_signal(gaussian_window(), 0.0, p)
    value = abs(zak(sig, u, eta))
    th = float(np.real(theta(complex(0.0, -u / TWO_PI), 1j / TWO_PI)))
    bound = (1.0 + p.a) ** p.n * math.exp(-0.5 * u * u) * th
    return float(value), float(bound)


@dataclass(frozen=True)
class FrameVerdict:
    """Result of a fundamental-domain scan of |Z(f)|.

    lower_bound / upper_bound are the sampled min/max of |Z|;
    min_location is the (u, eta) grid point achieving the minimum.
    verdict is 'Frame' when the sampled minimum clears the tolerance,
    'NotFrame' when a near-zero persists under a doubled-resolution
    refinement, and 'Inconclusive' otherwise.
    """

    lower_bound: float
    upper_bound: float
    grid_resolution: int
    verdict: str
    min_location: tuple
    tolerance: float

    def __post_init__(self):
        if self.lower_bound > self.upper_bound:
            raise ValueError(
                f"lower bound {self.lower_bound} exceeds upper bound "
                f"{self.upper_bound}"
            )

    def to_dict(self):
        return {
            "lowerBound": self.lower_bound,
            "upperBound": self.upper_bound,
            "gridResolution": self.grid_resolution,
            "verdict": self.verdict,
            "minLocation": list(self.min_location),
            "tolerance": self.tolerance,
        }


def _scan(f, resolution):
    u_axis = np.linspace(0.0, 1.0, resolution)
    eta_axis = np.linspace(0.0, TWO_PI, resolution)
    mags = np.abs(zak_grid(f, u_axis, eta_axis))
    i, j = np.unravel_index(int(np.argmin(mags)), mags.shape)
    return mags, (float(u_axis[i]), float(eta_axis[j]))


def frame_check(f, resolution, tolerance=FRAME_TOLERANCE):
    """Scan |Z(f)| on [0,1] x [0, 2pi] at resolution^2 points (inclusive
    endpoints) and classify the Gabor system of f on the unit lattice.

    A sampled minimum above the tolerance yields 'Frame' (the sampled
    minimum doubles as the empirical lower frame constant).  A sampled
    near-zero triggers one refinement at doubled resolution; only a
    confirmed near-zero yields 'NotFrame', since coarse grids can alias
    true zeros.  Sampling can never prove the absence of an off-grid
    zero, so verdicts are numerical evidence, not proofs.
    """
    resolution = int(resolution)
    if resolution < 2:
        raise ValueError(f"resolution must be at least 2, got {resolution}")
    mags, loc = _scan(f, resolution)
    lower = float(mags.min())
    upper = float(mags.max())
    if not math.isfinite(upper):
        verdict = "Inconclusive"
    elif lower > tolerance:
        verdict = "Frame"
    else:
        refined, _ = _scan(f, 2 * resolution)
        verdict = "NotFrame" if float(refined.min()) < tolerance else "Inconclusive"
    return FrameVerdict(
        lower_bound=lower,
        upper_bound=upper,
        grid_resolution=resolution,
        verdict=verdict,
        min_location=loc,
        tolerance=float(tolerance),
    )


@dataclass(frozen=True)
class WienerEstimate:
    """Numeric stand-in for a Wiener-amalgam norm: the sum over unit
    cells of the sampled sup of |f|.  Always heuristic — a finite sample
    neither certifies membership nor the true essential sup."""

    value: float
    cells: int
    samples_per_cell: int
    heuristic: bool = True


def wiener_norm_estimate(f, samples_per_cell=64):
    """Estimate sum_k sup_{[k, k+1)} |f| by dense sampling of each unit
    cell out to the decay radius."""
    r = getattr(f, "decay_radius", None)
    if r is None:
        raise ValueError("wiener estimate needs an evaluator with a decay_radius")
    kmax = int(math.ceil(float(r))) + 1
    s = np.linspace(0.0, 1.0, int(samples_per_cell), endpoint=False)
    total = 0.0
    for k in range(-kmax, kmax):
        total += float(np.max(np.abs(np.asarray(f(k + s)))))
    return WienerEstimate(
        value=total, cells=2 * kmax, samples_per_cell=int(samples_per_cell)
    )
