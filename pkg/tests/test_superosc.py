import math

import numpy as np
import pytest

from superstft.superosc import (GeneralizedSequence, SuperoscParams,
                                approximating_sequence, coefficients, f_n,
                                f_n_direct, frequencies, from_superosc,
                                generalized_f, supershift_probe)

rng = np.random.default_rng(7)


def test_params_validation():
    with pytest.raises(ValueError):
        SuperoscParams(a=2.0, n=0)
    with pytest.raises(ValueError):
        SuperoscParams(a=math.inf, n=3)
    assert SuperoscParams(a=2.0, n=3).is_superoscillatory
    assert not SuperoscParams(a=0.5, n=3).is_superoscillatory


def test_coefficient_sums():
    """sum C_j = 1 always; sum |C_j| = max(1,|a|)^n."""
    for a in (0.5, 1.5, 2.0, -3.0):
        for n in (1, 2, 5, 12):
            c = coefficients(SuperoscParams(a=a, n=n))
            assert abs(c.sum() - 1.0) < 1e-12
            assert abs(np.abs(c).sum() - max(1.0, abs(a)) ** n) < 1e-9 * max(1.0, abs(a)) ** n


def test_frequencies_band():
    w = frequencies(SuperoscParams(a=2.0, n=6))
    assert w[0] == 1.0 and w[-1] == -1.0
    assert len(w) == 7
    assert np.all(np.diff(w) < 0)
    assert np.max(np.abs(w)) <= 1.0


def test_product_form_matches_sum():
    """The stable product form equals the explicit exponential sum."""
    t = np.linspace(-4.0, 4.0, 41)
    for a in (1.5, 2.0):
        for n in (1, 3, 8):
            p = SuperoscParams(a=a, n=n)
            np.testing.assert_allclose(f_n(p, t), f_n_direct(p, t),
                                       rtol=0, atol=1e-10 * (1 + a) ** n)


def test_f_n_at_zero_and_scalar_return():
    p = SuperoscParams(a=2.0, n=4)
    assert f_n(p, 0.0) == 1.0
    assert isinstance(f_n(p, 0.3), complex)
    assert f_n(p, np.array([0.1, 0.2])).shape == (2,)


def test_f_n_superoscillates_locally():
    """Near t = 0 the sequence tracks e^{i a t} ever better as n grows."""
    a = 2.0
    t = np.linspace(-0.5, 0.5, 11)
    errs = []
    for n in (5, 20, 80):
        p = SuperoscParams(a=a, n=n)
        errs.append(np.max(np.abs(f_n(p, t) - np.exp(1j * a * t))))
    assert errs[2] < errs[1] < errs[0]
    # first-order rate in 1/n: 16x more terms -> ~16x smaller error
    assert errs[2] < 0.1 * errs[0]


def test_generalized_sequence_wraps_basic():
    p = SuperoscParams(a=1.5, n=5)
    seq = from_superosc(p)
    assert seq.max_abs_frequency == 1.0
    assert seq.is_superoscillating_toward(1.5)
    assert not seq.is_superoscillating_toward(0.5)
    t = np.linspace(-2, 2, 9)
    np.testing.assert_allclose(generalized_f(seq, t), f_n(p, t), atol=1e-12)


def test_generalized_sequence_validation():
    with pytest.raises(ValueError):
        GeneralizedSequence(coefficients=(1.0, 2.0), frequencies=(0.5,))
    with pytest.raises(ValueError):
        GeneralizedSequence(coefficients=(), frequencies=())


def test_supershift_probe_exponential():
    """Probing w -> e^{i w y} reproduces F_n(y) by definition."""
    p = SuperoscParams(a=2.0, n=6)
    for y in (-1.3, 0.0, 0.8):
        probe = supershift_probe(lambda w: np.exp(1j * w * y), p)
        assert abs(probe - f_n(p, y)) < 1e-12


def test_supershift_probe_linear_exact():
    """sum C_j omega_j = a exactly (first-moment identity)."""
    for a in (1.5, -2.5):
        for n in (2, 7):
            p = SuperoscParams(a=a, n=n)
            assert abs(supershift_probe(lambda w: w, p) - a) < 1e-10


def test_supershift_probe_array_values():
    p = SuperoscParams(a=1.5, n=4)
    y = np.linspace(-1, 1, 5)
    probe = supershift_probe(lambda w: np.exp(1j * w * y), p)
    np.testing.assert_allclose(probe, f_n(p, y), atol=1e-12)


def test_approximating_sequence_supershift():
    """sum C_j psi(x + omega_j) approaches psi(x + a) as n grows."""
    psi = lambda t: np.exp(-t * t / 2.0)
    a, x = 1.5, 0.3
    target = psi(x + a)
    errs = [abs(approximating_sequence(psi, SuperoscParams(a=a, n=n), x) - target)
            for n in (10, 40)]
    assert errs[1] < 0.6 * errs[0]
