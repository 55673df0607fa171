"""Superoscillating sequences and the supershift limit probe.

The basic object is the sequence

    F_n(t) = sum_j C_j(n, a) e^{i omega_j t},
    omega_j = 1 - 2j/n,
    C_j(n, a) = C(n, j) ((1+a)/2)^{n-j} ((1-a)/2)^j,

whose frequencies all lie in [-1, 1] while the pointwise limit is
e^{i a t} for any real a — superoscillatory for |a| > 1.  The same
coefficient/frequency pattern applied to an arbitrary function psi,

    sum_j C_j psi(x + omega_j),

converges to psi(x + a) under mild regularity (a "supershift").
"""

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class SuperoscParams:
    """Parameters (a, n) of the basic superoscillating sequence: target
    frequency a (any real; |a| > 1 is the superoscillatory regime) and
    order n >= 1."""

    a: float
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n}")
        if not math.isfinite(self.a):
            raise ValueError(f"a must be finite, got {self.a}")

    @property
    def is_superoscillatory(self):
        return abs(self.a) > 1.0


def coefficients(p):
    """Coefficient vector C_j(n, a), j = 0..n.  Sums to 1; the absolute
    sum is max(1, |a|)^n, which is what makes |a| > 1 interesting."""
    n, a = p.n, p.a
    return np.array([
        math.comb(n, j) * ((1.0 + a) / 2.0) ** (n - j) * ((1.0 - a) / 2.0) ** j
        for j in range(n + 1)
    ])


def frequencies(p):
    """Frequency vector omega_j = 1 - 2j/n, j = 0..n (descending 1 to -1)."""
    n = p.n
    return 1.0 - 2.0 * np.arange(n + 1) / n


def f_n(p, t):
    """F_n(t) via the numerically stable product form
    (cos(t/n) + i a sin(t/n))^n; the coefficient sum cancels badly for
    large n·log(max(1,|a|))."""
    t = np.asarray(t, dtype=float)
    out = (np.cos(t / p.n) + 1j * p.a * np.sin(t / p.n)) ** p.n
    return complex(out) if out.ndim == 0 else out


def f_n_direct(p, t):
    """F_n(t) as the explicit exponential sum; oracle for f_n."""
    t = np.asarray(t, dtype=float)
    c = coefficients(p)
    w = frequencies(p)
    out = np.tensordot(c, np.exp(1j * np.multiply.outer(w, t)), axes=(0, 0))
    return complex(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class GeneralizedSequence:
    """A generalized Fourier sequence sum_j Z_j e^{i h_j t} with arbitrary
    complex coefficients Z_j and real frequencies h_j (equal lengths)."""

    coefficients: tuple
    frequencies: tuple

    def __post_init__(self):
        if len(self.coefficients) != len(self.frequencies):
            raise ValueError(
                f"coefficient/frequency length mismatch: "
                f"{len(self.coefficients)} vs {len(self.frequencies)}"
            )
        if len(self.coefficients) == 0:
            raise ValueError("sequence must have at least one term")

    @property
    def max_abs_frequency(self):
        return max(abs(h) for h in self.frequencies)

    def is_superoscillating_toward(self, a):
        """Band-limited label: all frequencies within [-1, 1] while the
        target |a| exceeds 1."""
        return self.max_abs_frequency <= 1.0 and abs(a) > 1.0


def from_superosc(p):
    """Wrap the basic (a, n) sequence as a GeneralizedSequence."""
    return GeneralizedSequence(
        coefficients=tuple(complex(c) for c in coefficients(p)),
        frequencies=tuple(float(w) for w in frequencies(p)),
    )


def generalized_f(seq, t):
    """Evaluate sum_j Z_j e^{i h_j t} for a GeneralizedSequence."""
    t = np.asarray(t, dtype=float)
    c = np.asarray(seq.coefficients, dtype=complex)
    w = np.asarray(seq.frequencies, dtype=float)
    out = np.tensordot(c, np.exp(1j * np.multiply.outer(w, t)), axes=(0, 0))
    return complex(out) if out.ndim == 0 else out


def approximating_sequence(psi, p, x):
    """The supershift sum  sum_j C_j psi(x + omega_j)  for a callable psi.
    As n grows this approaches psi(x + a)."""
    c = coefficients(p)
    w = frequencies(p)
    return sum(cj * psi(x + wj) for cj, wj in zip(c, w))


def supershift_probe(closed_form_at, p):
    """Apply the coefficient pattern to a lambda-indexed family:
    returns sum_j C_j closed_form_at(omega_j).  closed_form_at maps a
    frequency to any numpy-addable value (scalar or array), so this
    drives both scalar probes and whole-grid kernel sums."""
    c = coefficients(p)
    w = frequencies(p)
    total = None
    for cj, wj in zip(c, w):
        term = cj * np.asarray(closed_form_at(float(wj)))
        total = term if total is None else total + term
    if total.ndim == 0:
        return complex(total) if np.iscomplexobj(total) else float(total)
    return total
