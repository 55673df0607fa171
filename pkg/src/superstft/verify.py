"""Verification suites: every closed-form identity in the package checked
against an independent oracle (quadrature, series, or a second closed
route), each case reporting its worst observed error against a fixed
tolerance.

The registry groups cases into suites (stft, kernels, hermite, zak,
evolution, approx); ``run_suite`` executes one or all of them and returns
JSON-ready records.  All random draws come from a caller-seeded
generator, so reports are reproducible.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import approx as ap
from . import evolution as ev
from . import kernels as kn
from . import signals as sg
from . import special as sp
from . import transforms as tr
from . import zak as zk
from .quadrature import QuadratureSpec, make_spec
from .superosc import SuperoscParams, coefficients, frequencies

SUITES = ("all", "stft", "kernels", "hermite", "zak", "evolution", "approx")

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class CaseResult:
    id: str
    suite: str
    anchor: str
    params: dict
    max_error: float
    tolerance: float

    @property
    def passed(self):
        return self.max_error <= self.tolerance

    def to_record(self):
        return {
            "id": self.id,
            "paper_anchor": self.anchor,
            "params": self.params,
            "max_error": self.max_error,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }


_CASES = []


def _case(case_id, suite, anchor, tolerance):
    def wrap(fn):
        _CASES.append((case_id, suite, anchor, tolerance, fn))
        return fn

    return wrap


# ---------------------------------------------------------------------------
# stft suite
# ---------------------------------------------------------------------------

@_case("superosc-stft-closed", "stft",
       "closed kernel sum for the STFT of a superoscillation-modulated window",
       1e-8)
def _run_superosc_stft(rng):
    grid = np.linspace(-2.0, 2.0, 5)
    worst = 0.0
    for kind in ("gaussian", "hermite"):
        g = sg.gaussian_window() if kind == "gaussian" else sg.hermite_window(1)
        for a in (1.5, 2.0):
            for n in (2, 4, 8):
                p = SuperoscParams(a=a, n=n)
                scale = (1.0 + a) ** n
                for x in (0.0, 0.5):
                    s = sg.build_signal(g, x, p)
                    closed = kn.stft_superosc_closed_grid(g, x, p, grid, grid)
                    numeric = tr.stft_grid(
                        s, g, grid, grid,
                        spec=make_spec(s.decay_radius, float(np.max(np.abs(grid)))),
                    ).values
                    worst = max(worst,
                                float(np.max(np.abs(closed - numeric))) / scale)
    return worst, {"windows": ["gaussian", "hermite-1"], "a": [1.5, 2.0],
                   "n": [2, 4, 8], "x": [0.0, 0.5], "grid": "5x5 on [-2,2]^2",
                   "error_scale": "(1+a)^n"}


@_case("energy-orthogonality", "stft",
       "phase-space energy identity for the windowed transform", 1e-4)
def _run_energy(rng):
    g = sg.gaussian_window()
    h0 = sg.hermite_window(0)
    num = tr.moyal_double_integral(h0, g)
    target = TWO_PI * math.pi  # 2 pi ||h_0||^2 ||phi||^2 = 2 pi sqrt(pi)^2
    return abs(num - target) / abs(target), {
        "signal": "hermite-0", "window": "gaussian",
        "target": target, "relative": True}


@_case("moyal-full", "stft",
       "mixed-window phase-space inner-product identity", 1e-5)
def _run_moyal_full(rng):
    h0, h1, phi = sg.hermite_window(0), sg.hermite_window(1), sg.gaussian_window()
    num = tr.moyal_double_integral(h0, phi, h1, h1)
    closed = tr.moyal_inner_product(h0, h1, phi, h1)
    return float(abs(num - closed)), {
        "functions": ["hermite-0", "hermite-1"],
        "windows": ["gaussian", "hermite-1"], "absolute": True}


@_case("reconstruction", "stft",
       "pointwise inversion of the windowed transform", 1e-3)
def _run_reconstruction(rng):
    g = sg.gaussian_window()
    h0 = sg.hermite_window(0)
    axis = np.arange(-11.0, 11.0 + 0.25 / 2, 0.25)
    grid = tr.stft_grid(h0, g, axis, axis)
    points = [-1.2, -0.4, 0.0, 0.3, 1.1]
    rec = tr.reconstruct(grid, g, np.array(points))
    worst = float(np.max(np.abs(rec - h0(np.array(points)))))
    return worst, {"points": points, "grid": "[-11,11] step 0.25"}


@_case("fourier-eigenfunction", "stft",
       "Hermite functions as eigenfunctions of the Fourier transform", 1e-9)
def _run_fourier_eigen(rng):
    worst = 0.0
    lam = 0.7
    for k in range(5):
        hk = sg.hermite_window(k)
        val = tr.fourier(hk, lam)
        expect = math.sqrt(TWO_PI) * (-1j) ** k * hk(lam)
        worst = max(worst, float(abs(val - expect)))
    return worst, {"orders": list(range(5)), "lam": lam,
                   "eigenvalue": "sqrt(2 pi) (-i)^k"}


@_case("bargmann-transform", "stft",
       "entire-function transform of Hermite modes and its reproducing kernel",
       1e-9)
def _run_bargmann(rng):
    worst = 0.0
    z = 0.5 + 0.3j
    for n in range(4):
        hn = sg.hermite_window(n)
        val = tr.bargmann(hn, z)
        expect = math.pi ** (-0.25) * 2.0 ** (0.5 * n) * z**n
        worst = max(worst, float(abs(val - expect)))
    # reproducing property of the kernel functions
    zq, wq = 0.5, 0.3 + 0.1j

    def kernel_fn(zz):
        def f(t):
            t = np.asarray(t, dtype=float)
            return (math.pi ** -0.75
                    * np.exp(-(zz**2 + t**2) / 2.0 + math.sqrt(2.0) * zz * t))
        return f

    spec = make_spec(9.0, math.sqrt(2.0) * max(abs(zq), abs(wq)))
    ip = tr.inner_product(kernel_fn(zq), kernel_fn(wq), spec=spec)
    worst = max(worst, float(abs(ip - np.exp(zq * np.conj(wq)) / math.pi)))
    return worst, {"orders": list(range(4)), "z": [z.real, z.imag],
                   "kernel_points": [[0.5, 0.0], [0.3, 0.1]]}


# ---------------------------------------------------------------------------
# kernels suite
# ---------------------------------------------------------------------------

@_case("gabor-kernel-gaussian", "kernels",
       "closed Gaussian time-frequency kernel", 1e-10)
def _run_kernel_gaussian(rng):
    g = sg.gaussian_window()
    worst = 0.0
    for _ in range(20):
        x, omega, u, eta = rng.uniform(-2.0, 2.0, 4)
        q = kn.TFQuadruple(x=x, omega=omega, u=u, eta=eta)
        worst = max(worst, float(abs(kn.gabor_kernel_gaussian(q)
                                     - kn.gabor_kernel_numeric(g, q))))
    return worst, {"quadruples": 20, "range": "[-2,2]^4"}


@_case("gabor-kernel-hermite", "kernels",
       "closed Hermite kernel with the quadrature-calibrated constant", 1e-8)
def _run_kernel_hermite(rng):
    worst = 0.0
    for n in range(1, 5):
        g = sg.hermite_window(n)
        for _ in range(5):
            x, omega, u, eta = rng.uniform(-1.5, 1.5, 4)
            q = kn.TFQuadruple(x=x, omega=omega, u=u, eta=eta)
            worst = max(worst, float(abs(kn.gabor_kernel_hermite(n, q)
                                         - kn.gabor_kernel_numeric(g, q))))
    return worst, {"orders": [1, 2, 3, 4], "points_per_order": 5,
                   "calibration": "2^n n! times the base product"}


@_case("supershift-limit", "kernels",
       "kernel sums converge to the limit-frequency kernel as n grows", 0.6)
def _run_supershift_limit(rng):
    a, x, u, eta = 1.5, 0.3, 0.4, 0.8
    g = sg.gaussian_window()
    ratios = []
    errs = {}
    for n in (10, 40):
        p = SuperoscParams(a=a, n=n)
        errs[n] = abs(kn.stft_superosc_closed(g, x, p, u, eta)
                      - kn.stft_superosc_limit(g, x, a, u, eta))
    ratios.append(errs[40] / errs[10])
    for (k, m) in [(1, 2), (0, 1)]:
        for n in (10, 40):
            p = SuperoscParams(a=a, n=n)
            errs[n] = abs(kn.stft_superosc_cross(k, m, x, p, u, eta)
                          - kn.stft_superosc_limit_cross(k, m, x, a, u, eta))
        ratios.append(errs[40] / errs[10])
    return float(max(ratios)), {"a": a, "n": [10, 40],
                                "settings": ["gaussian-kernel",
                                             "cross-window (1,2)",
                                             "cross-window (0,1)"],
                                "criterion": "error(40)/error(10)"}


@_case("fock-form", "kernels",
       "coherent-state form of the superoscillation transform", 1e-10)
def _run_fock_form(rng):
    g = sg.gaussian_window()
    worst = 0.0
    for _ in range(10):
        x, u, eta = rng.uniform(-1.5, 1.5, 3)
        a = rng.uniform(1.1, 2.5)
        n = int(rng.integers(1, 6))
        p = SuperoscParams(a=a, n=n)
        worst = max(worst, float(abs(kn.stft_superosc_fock_form(x, p, u, eta)
                                     - kn.stft_superosc_closed(g, x, p, u, eta))))
    return worst, {"points": 10, "n_max": 5}


# ---------------------------------------------------------------------------
# hermite suite
# ---------------------------------------------------------------------------

@_case("i_km_compact", "hermite",
       "compact coefficient form of the pair-integral polynomial", 1e-10)
def _run_ikm(rng):
    worst = 0.0
    for _ in range(20):
        k = int(rng.integers(0, 7))
        m = int(rng.integers(0, 7))
        x, u, lam = (rng.uniform(-1.0, 1.0, 3)
                     + 1j * rng.uniform(-1.0, 1.0, 3))
        worst = max(worst, float(abs(kn.i_km_series(k, m, x, u, lam)
                                     - kn.i_km_closed(k, m, x, u, lam))))
    return worst, {"points": 20, "k_max": 6, "m_max": 6, "complex": True}


@_case("pair-integral", "hermite",
       "master integral of a shifted Hermite pair against quadrature", 1e-8)
def _run_pair_integral(rng):
    worst = 0.0
    for _ in range(10):
        k = int(rng.integers(0, 5))
        m = int(rng.integers(0, 5))
        u, x, lam = rng.uniform(-1.5, 1.5, 3)
        spec = make_spec(12.0, u, x)
        quad = tr.fourier(
            lambda t: sp.hermite_function(k, t - u) * sp.hermite_function(m, t - x),
            -lam, spec=spec)
        worst = max(worst, float(abs(quad - kn.hermite_pair_integral(k, m, u, x, lam))))
    return worst, {"points": 10, "k_max": 4, "m_max": 4}


@_case("hermite-convolution", "hermite",
       "closed convolution of modulated Hermite functions", 1e-8)
def _run_convolution(rng):
    worst = 0.0
    for _ in range(10):
        k = int(rng.integers(0, 5))
        m = int(rng.integers(0, 5))
        x, u = rng.uniform(-1.5, 1.5, 2)
        lam = rng.uniform(-3.0, 3.0)
        quad = tr.convolve(
            lambda t: np.exp(1j * x * t) * sp.hermite_function(k, t),
            lambda t: np.exp(1j * u * t) * sp.hermite_function(m, t),
            lam, spec=make_spec(12.0, lam))
        worst = max(worst, float(abs(quad - kn.hermite_convolution_closed(k, m, x, u, lam))))
        # autoconvolution specialization at zero modulation
        quad0 = tr.convolve(lambda t: sp.hermite_function(k, t),
                            lambda t: sp.hermite_function(m, t),
                            lam, spec=make_spec(12.0, lam))
        worst = max(worst, float(abs(quad0 - kn.hermite_autoconvolution(k, m, lam))))
    return worst, {"points": 10, "k_max": 4, "m_max": 4, "lam_range": [-3.0, 3.0]}


@_case("generating-pairing", "hermite",
       "two-variable generating function of the 2D-complex Hermite family",
       1e-8)
def _run_generating(rng):
    worst = 0.0
    for _ in range(5):
        z, w = rng.uniform(-1.0, 1.0, 2) + 1j * rng.uniform(-1.0, 1.0, 2)
        u, v = rng.uniform(-0.5, 0.5, 2)
        lhs = sp.complex_hermite_generating_sum(z, w, u, v, 20)
        rhs = np.exp(u * w + v * z - u * v)
        worst = max(worst, float(abs(lhs - rhs)))
    return worst, {"points": 5, "K": 20, "uv_range": 0.5,
                   "pairing": "u rides w, v rides z"}


@_case("generating-sum", "hermite",
       "generating identity for the modulated-pair convolution family", 1e-8)
def _run_gen_sum(rng):
    worst = 0.0
    for _ in range(5):
        x = rng.uniform(-1.0, 1.0)
        lam = rng.uniform(-1.5, 1.5)
        u, v = rng.uniform(-0.5, 0.5, 2) + 1j * rng.uniform(-0.25, 0.25, 2)
        lhs, rhs = kn.generating_sum_check(x, u, v, lam, 20)
        worst = max(worst, float(abs(lhs - rhs)))
    return worst, {"points": 5, "K": 20}


@_case("generating-product", "hermite",
       "generating identity for the transform-side Hermite products", 1e-8)
def _run_gen_product(rng):
    worst = 0.0
    for _ in range(5):
        x = rng.uniform(-1.0, 1.0)
        lam = rng.uniform(-1.5, 1.5)
        u, v = rng.uniform(-0.5, 0.5, 2)
        lhs, rhs = kn.generating_product_check(x, u, v, lam, 20)
        worst = max(worst, float(abs(lhs - rhs)))
    return worst, {"points": 5, "K": 20}


@_case("norm-gaussian", "hermite",
       "closed energy of the Gaussian-window superoscillating signal", 1e-5)
def _run_norm_gaussian(rng):
    g = sg.gaussian_window()
    worst = 0.0
    for n in range(1, 9):
        for a in (1.5, 2.0):
            p = SuperoscParams(a=a, n=n)
            x = 0.4
            closed = kn.norm_sq_closed_gaussian(x, p)
            quad = sg.window_norm_sq(g) * float(
                sg.signal_norm_sq_closed(
                    sg.custom_window(g.func, decay_radius=g.decay_radius), x, p))
            worst = max(worst, abs(closed - quad) / abs(quad))
    return worst, {"n_max": 8, "a": [1.5, 2.0], "x": 0.4, "relative": True}


@_case("norm-hermite", "hermite",
       "closed energy of Hermite-window signals against quadrature", 1e-5)
def _run_norm_hermite(rng):
    worst = 0.0
    for n in range(1, 5):
        p = SuperoscParams(a=1.5, n=n)
        for k in range(3):
            for m in range(3):
                closed = kn.norm_sq_closed_hermite(k, m, 0.3, p)
                hm = sg.hermite_window(m)
                quad = sg.window_norm_sq(sg.hermite_window(k)) * float(
                    sg.signal_norm_sq_closed(
                        sg.custom_window(hm.func, decay_radius=hm.decay_radius),
                        0.3, p))
                worst = max(worst, abs(closed - quad) / abs(quad))
    return worst, {"n_max": 4, "k_max": 2, "m_max": 2, "relative": True}


@_case("hermite-diagonal-value", "hermite",
       "diagonal value of the 2D-complex Hermite polynomials at the origin",
       1e-8)
def _run_diagonal(rng):
    worst = 0.0
    for m in range(9):
        val = sp.complex_hermite_2d(m, m, 0.0, 0.0)
        worst = max(worst, float(abs(val - (-1.0) ** m * math.factorial(m))))
    return worst, {"m_max": 8, "value": "(-1)^m m!"}


# ---------------------------------------------------------------------------
# zak suite
# ---------------------------------------------------------------------------

@_case("zak-superosc-identity", "zak",
       "termwise frequency-shift expansion of the lattice transform", 1e-10)
def _run_zak_superosc(rng):
    worst = 0.0
    upts = np.linspace(0.05, 0.95, 4)
    epts = np.linspace(0.1, 6.0, 4)
    for kind in ("gaussian", "hermite"):
        g = sg.gaussian_window() if kind == "gaussian" else sg.hermite_window(1)
        for n in (2, 4):
            p = SuperoscParams(a=2.0, n=n)
            s = sg.build_signal(g, 0.0, p)
            for u in upts:
                for eta in epts:
                    direct = zk.zak(s, float(u), float(eta))
                    closed = zk.zak_superosc(g, 0.0, p, float(u), float(eta))
                    worst = max(worst, abs(direct - closed))
    return float(worst), {"windows": ["gaussian", "hermite-1"], "n": [2, 4],
                          "grid": "4x4"}


@_case("zak-shift-covariance", "zak",
       "time-frequency shift covariance and quasi-periodicity of the "
       "lattice transform", 1e-10)
def _run_zak_shift(rng):
    g = sg.gaussian_window()
    h1 = sg.hermite_window(1)
    worst = max(
        zk.zak_shift_identity_check(g, 0.0, 0.0, 0.3, 0.5),
        zk.zak_shift_identity_check(g, 1.0, math.pi, 0.3, 0.5),
        zk.zak_shift_identity_check(h1, 0.5, 2.0, 0.1, 0.9),
    )
    qp = abs(zk.zak(g, 1.3, 0.7) - np.exp(1j * 0.7) * zk.zak(g, 0.3, 0.7))
    worst = max(worst, float(qp))
    return float(worst), {"checks": ["identity-shift", "(1, pi)", "(0.5, 2)",
                                     "quasi-periodicity"]}


@_case("theta-bound", "zak",
       "theta-function upper bound on the lattice transform of the "
       "superoscillating Gaussian signal", 0.0)
def _run_theta_bound(rng):
    worst = 0.0
    for (a, n) in [(2.0, 3), (1.5, 5), (2.0, 4)]:
        p = SuperoscParams(a=a, n=n)
        for u in (0.0, 0.25, 0.5, 0.9):
            for eta in (0.0, 1.0, 3.0, 6.0):
                value, bound = zk.theta_bound_check(p, u, eta)
                worst = max(worst, value - bound)
    return float(max(worst, 0.0)), {"params": [[2.0, 3], [1.5, 5], [2.0, 4]],
                                    "grid": "4x4",
                                    "criterion": "max(value - bound, 0)"}


@_case("theta-value", "zak",
       "third theta value at the Gaussian lattice nome", 1e-6)
def _run_theta_value(rng):
    val = float(np.real(sp.theta(0.0, 1j / TWO_PI)))
    return abs(val - 2.506628), {"reference": 2.506628}


@_case("frame-verdict", "zak",
       "Gabor-frame verdict for the superoscillating Gaussian signal", 0.0)
def _run_frame(rng):
    g = sg.gaussian_window()
    p = SuperoscParams(a=2.0, n=4)
    s = sg.build_signal(g, 0.0, p)
    v128 = zk.frame_check(s, 128)
    v256 = zk.frame_check(s, 256)
    ok = v128.verdict == "Frame" and v256.verdict == "Frame"
    return (0.0 if ok else 1.0), {"a": 2.0, "n": 4,
                                  "resolutions": [128, 256],
                                  "verdicts": [v128.verdict, v256.verdict],
                                  "lower_bounds": [v128.lower_bound,
                                                   v256.lower_bound]}


# ---------------------------------------------------------------------------
# evolution suite
# ---------------------------------------------------------------------------

@_case("evolution-numeric-vs-closed", "evolution",
       "momentum-space quadrature against the closed Gaussian evolution",
       1e-7)
def _run_evolution_routes(rng):
    g = sg.gaussian_window()
    worst = 0.0
    for _ in range(6):
        x, t, x0, k0 = rng.uniform(-1.0, 1.0, 4)
        pt = ev.EvolutionPoint(x=x, t=t, x0=x0, k0=k0)
        worst = max(worst, float(abs(ev.evolve_numeric(g, pt)
                                     - ev.evolve_gaussian_closed(pt))))
        worst = max(worst, float(abs(ev.evolve_hermite(0, pt)
                                     - ev.evolve_gaussian_closed(pt))))
    pt = ev.EvolutionPoint(x=0.0, t=0.3, x0=0.1, k0=1.0)
    worst = max(worst, float(abs(ev.evolve_numeric(sg.hermite_window(2), pt)
                                 - ev.evolve_hermite(2, pt))))
    return worst, {"points": 6, "routes": ["numeric", "gaussian-closed",
                                           "hermite-quadrature"]}


@_case("evolution-initial-datum", "evolution",
       "every evolution path returns 2 pi times the datum at t = 0", 1e-7)
def _run_evolution_datum(rng):
    worst = 0.0
    g = sg.gaussian_window()
    for _ in range(4):
        x, x0, k0 = rng.uniform(-1.0, 1.0, 3)
        pt = ev.EvolutionPoint(x=x, t=0.0, x0=x0, k0=k0)
        datum = np.exp(1j * k0 * x) * g(x - x0)
        worst = max(worst, float(abs(ev.evolve_numeric(g, pt) - TWO_PI * datum)))
        worst = max(worst, float(abs(ev.evolve_gaussian_closed(pt) - TWO_PI * datum)))
    for m in (1, 2):
        hm = sg.hermite_window(m)
        x, x0, k0 = 0.4, 0.0, 0.5
        pt = ev.EvolutionPoint(x=x, t=0.0, x0=x0, k0=k0)
        datum = np.exp(1j * k0 * x) * hm(x - x0)
        worst = max(worst, float(abs(ev.evolve_hermite(m, pt) - TWO_PI * datum)))
    return worst, {"points": 4, "hermite_orders": [1, 2],
                   "convention": "2 pi times the datum"}


@_case("evolution-pde-residual", "evolution",
       "finite-difference residual of the free-evolution equation", 1e-4)
def _run_pde(rng):
    worst = 0.0
    for _ in range(10):
        x = rng.uniform(-1.0, 1.0)
        t = rng.uniform(-1.0, 1.0)
        x0, k0 = rng.uniform(-0.5, 0.5, 2)

        def f(xx, tt):
            return ev.evolve_gaussian_closed(ev.EvolutionPoint(xx, tt, x0, k0))

        res = ev.pde_residual(f, x, t)
        worst = max(worst, res / abs(f(x, t)))
    return float(worst), {"points": 10, "h": 1e-3, "relative": True,
                          "t_range": [-1.0, 1.0]}


@_case("evolution-triple-path", "evolution",
       "phase-space integral representation of the evolved signal", 1e-8)
def _run_triple_path(rng):
    g = sg.gaussian_window()
    p = SuperoscParams(a=2.0, n=4)
    worst = 0.0
    for (y, t) in [(0.7, 0.4), (-0.3, 0.1), (0.0, 0.8)]:
        v1 = ev.evolve_superosc_signal(g, 0.5, p, y, t)
        v2 = ev.evolve_superosc_integral_representation(g, 0.5, p, y, t)
        worst = max(worst, abs(v1 - v2))
    return float(worst), {"x": 0.5, "a": 2.0, "n": 4,
                          "points": [[0.7, 0.4], [-0.3, 0.1], [0.0, 0.8]]}


# ---------------------------------------------------------------------------
# approx suite
# ---------------------------------------------------------------------------

@_case("fourier-factorization", "approx",
       "Fourier transform of the approximating average factorizes exactly",
       1e-8)
def _run_apsthm(rng):
    g = sg.gaussian_window()
    worst = 0.0
    for n in range(1, 5):
        p = SuperoscParams(a=2.0, n=n)
        for lam in (-2.0, -0.5, 0.0, 0.9, 2.3):
            worst = max(worst, ap.apsthm_residual(g, p, lam))
    return worst, {"n_max": 4, "lam_points": [-2.0, -0.5, 0.0, 0.9, 2.3]}


@_case("approx-route-agreement", "approx",
       "ambiguity route equals the 2D-Hermite closed route", 1e-8)
def _run_route_agreement(rng):
    worst = 0.0
    p = SuperoscParams(a=2.0, n=3)
    for m in range(3):
        g = sg.hermite_window(m)
        for (u, eta) in [(0.3, 0.5), (-0.4, 1.1)]:
            via = ap.stft_approx_via_ambiguity(g, p, u, eta)
            closed = ap.stft_approx_hermite_closed(m, m, p, u, eta)
            worst = max(worst, abs(via - closed))
    return float(worst), {"orders": [0, 1, 2], "a": 2.0, "n": 3}


@_case("approx-limit-closed-form", "approx",
       "closed limit of the Gaussian approximating transform against "
       "quadrature", 1e-8)
def _run_app2(rng):
    g = sg.gaussian_window()
    a = 1.5
    shifted = sg.custom_window(lambda t: g(np.asarray(t, dtype=float) + a),
                               decay_radius=g.decay_radius + a)
    worst = 0.0
    for (u, eta) in [(0.2, 0.1), (0.0, 0.0), (-0.7, 1.3)]:
        quad = tr.stft(shifted, g, u, eta)
        worst = max(worst, abs(quad - ap.app2_closed(u, eta, a)))
    return float(worst), {"a": a, "points": [[0.2, 0.1], [0.0, 0.0], [-0.7, 1.3]]}


@_case("supershift-convergence", "approx",
       "approximating transforms approach the shifted-target closed form",
       0.6)
def _run_supershift_convergence(rng):
    a, u, eta = 1.5, 0.2, 0.1
    tgt = ap.app2_closed(u, eta, a)
    errs = {}
    for n in (10, 40):
        p = SuperoscParams(a=a, n=n)
        errs[n] = abs(ap.stft_approx_hermite_closed(0, 0, p, u, eta) - tgt)
    return float(errs[40] / errs[10]), {"a": a, "n": [10, 40],
                                        "criterion": "error(40)/error(10)"}


# ---------------------------------------------------------------------------
# runner
# ---------------------------------------------------------------------------

def run_suite(suite="all", seed=42):
    """Run one suite (or all) and return a list of CaseResult."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    results = []
    for case_id, case_suite, anchor, tolerance, fn in _CASES:
        if suite != "all" and case_suite != suite:
            continue
        rng = np.random.default_rng(seed)
        max_error, params = fn(rng)
        results.append(CaseResult(id=case_id, suite=case_suite, anchor=anchor,
                                  params=params, max_error=float(max_error),
                                  tolerance=float(tolerance)))
    return results


def report(results, seed):
    """JSON-ready report dict for a list of CaseResult."""
    return {
        "schema": 1,
        "seed": seed,
        "suites": [r.to_record() for r in results],
    }
