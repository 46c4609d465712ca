"""Dynamical-sampling and derivative-sampling experiments.

Two experimental reproductions live here.

Space-time (dynamical) sampling: a sequence F in l^2(Z), truncated to
[-N, N], is convolved with kernels G_i and subsampled on index sets
Omega_i.  Recovery solves the stacked least-squares system; its
condition number mirrors the frame bounds of the windowed exponential
system attached to ghat_i, since the map F -> (G * F)(omega) is the
analysis operator of that system in disguise.

Derivative sampling: a Paley-Wiener function F with F = f-hat on
[-1/2, 1/2] is sampled through {F(n)}_{n>=0} and {-F'(n)/(2 pi i)}_{n<0}.
The derivative samples are the Fourier coefficients of x f(x), so the
scheme is the split system F(g) with the sawtooth window g(x) = x:
injective but not stable on all of L^2, yet stable on the even
subspace, with an explicit constant computed here exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .frame_bounds import FrequencySet, frame_bounds_subspace
from .windows import Constant, TrigPoly, WindowSpec, sawtooth


class SamplingError(ValueError):
    """Base class for sampling-experiment validation errors."""


class EmptySampleSetError(SamplingError):
    """A kernel's sample set misses the truncation window entirely."""


class RankDeficientError(ArithmeticError):
    """The stacked forward matrix is singular to machine precision."""


@dataclass(frozen=True)
class Kernel:
    """Convolution kernel given through ghat plus its sample set."""

    window: WindowSpec
    samples: FrequencySet


@dataclass(frozen=True)
class SequenceWindowPair:
    """Truncated sequence F on [-N, N] with its sampling kernels."""

    values: np.ndarray
    kernels: tuple

    def __post_init__(self):
        values = np.asarray(self.values, dtype=complex)
        if values.ndim != 1 or values.size % 2 != 1:
            raise SamplingError("values must be a 1-d array of odd length 2N+1")
        object.__setattr__(self, "values", values)
        for kernel in self.kernels:
            if not math.isfinite(kernel.window.sup_norm):
                raise SamplingError(
                    f"kernel window {kernel.window.label} must be bounded")

    @property
    def N(self) -> int:
        return (self.values.size - 1) // 2


def kernel_taps(w: WindowSpec, N: int) -> np.ndarray:
    """Taps G(n) for |n| <= N of the kernel with ghat = w.

    The transform convention g(x) = sum G(n) e^{-2 pi i n x} pairs the
    tap at n with the window coefficient b_{-n}.
    """
    return np.array([w.fourier_coeff(-n) for n in range(-N, N + 1)], dtype=complex)


def _sample_radius(pair: SequenceWindowPair, sample_radius) -> int:
    if sample_radius is None:
        return pair.N
    radius = int(sample_radius)
    if radius < 1:
        raise SamplingError(f"sample_radius must be >= 1, got {sample_radius}")
    return radius


def _sample_indices(kernel: Kernel, radius: int) -> list:
    indices = kernel.samples.integer_elements_within(-radius, radius)
    if not indices:
        raise EmptySampleSetError(
            f"sample set of kernel {kernel.window.label} misses [-{radius}, {radius}]")
    return indices


def dynamical_forward(pair: SequenceWindowPair, sample_radius=None) -> list:
    """Convolve-and-subsample each kernel: (G_i * F) on Omega_i cut to
    [-R, R] with R = sample_radius, default N.

    F is extended by zero outside [-N, N] and the convolution is the
    full linear one, so the map matches the stacked matrix of
    :func:`forward_matrix` exactly.  The zero-extended convolution is
    supported on [-2N, 2N]; R = 2N therefore keeps every informative
    sample, while the default R = N cuts the scheme to a square system.
    """
    N = pair.N
    radius = _sample_radius(pair, sample_radius)
    out = []
    for kernel in pair.kernels:
        taps = kernel_taps(kernel.window, N)
        conv = np.convolve(pair.values, taps)
        indices = _sample_indices(kernel, radius)
        # full convolution index k lives at position k + 2N
        out.append(np.array([conv[k + 2 * N] if abs(k) <= 2 * N else 0.0
                             for k in indices]))
    return out


def forward_matrix(pair: SequenceWindowPair, sample_radius=None) -> np.ndarray:
    """Stacked matrix of the forward map, rows ordered kernel by kernel."""
    N = pair.N
    radius = _sample_radius(pair, sample_radius)
    cols = 2 * N + 1
    rows = []
    for kernel in pair.kernels:
        taps = kernel_taps(kernel.window, N)
        for omega in _sample_indices(kernel, radius):
            row = np.zeros(cols, dtype=complex)
            for j in range(-N, N + 1):
                shift = omega - j
                if -N <= shift <= N:
                    row[j + N] = taps[shift + N]
            rows.append(row)
    return np.array(rows)


@dataclass(frozen=True)
class RecoveryReport:
    relative_error: float
    condition_number: float
    residual: float
    N: int


def dynamical_recover(pair: SequenceWindowPair, samples,
                      noise_std: float = 0.0, rng=None,
                      sample_radius=None) -> RecoveryReport:
    """Least-squares recovery of F from its stacked samples.

    Args:
        pair: sequence and kernels (the truth for the error report).
        samples: output of :func:`dynamical_forward`, taken with the
            same sample_radius.
        noise_std: optional additive complex Gaussian noise level, for
            condition-number illustration only.
        rng: numpy Generator used when noise_std > 0.
        sample_radius: sample window half-width, default N.  The square
            default can be exactly singular for schemes whose kernel
            has purely imaginary odd taps (the reduced block is an
            odd-dimension antisymmetric matrix); passing 2N keeps every
            informative sample of the zero-extended convolution and
            makes the conditioning track the frame-bound ratio.

    Raises:
        SamplingError: fewer samples than unknowns.
        RankDeficientError: singular stacked matrix.
    """
    A = forward_matrix(pair, sample_radius)
    s = np.concatenate([np.asarray(v, dtype=complex) for v in samples])
    if s.size != A.shape[0]:
        raise SamplingError(
            f"sample count {s.size} does not match forward rows {A.shape[0]}")
    unknowns = 2 * pair.N + 1
    if s.size < unknowns:
        raise SamplingError(
            f"need at least {unknowns} samples to determine F, got {s.size}")
    if noise_std > 0.0:
        rng = np.random.default_rng(0) if rng is None else rng
        s = s + noise_std * (rng.standard_normal(s.size)
                             + 1j * rng.standard_normal(s.size))
    singular = np.linalg.svd(A, compute_uv=False)
    sigma_max = float(singular[0])
    sigma_min = float(singular[-1])
    if sigma_min <= sigma_max * max(A.shape) * np.finfo(float).eps:
        raise RankDeficientError(
            f"forward matrix is singular to machine precision "
            f"(sigma_min = {sigma_min:.3e})")
    solution = np.linalg.lstsq(A, s, rcond=None)[0]
    truth_norm = float(np.linalg.norm(pair.values))
    error = float(np.linalg.norm(solution - pair.values))
    relative = error / truth_norm if truth_norm > 0 else error
    residual = float(np.linalg.norm(A @ solution - s))
    return RecoveryReport(relative, sigma_max / sigma_min, residual, pair.N)


def split_scheme(values: np.ndarray, window: WindowSpec) -> SequenceWindowPair:
    """The two-kernel scheme: identity samples on the negative integers,
    windowed-kernel samples on the nonnegative integers.

    Up to reflection and a one-slot shift this is the analysis operator
    of the split system F(window) truncated to [-N, N], so recovery
    conditioning tracks the frame bounds of that system.
    """
    return SequenceWindowPair(
        np.asarray(values, dtype=complex),
        (
            Kernel(Constant(1.0), FrequencySet.negatives()),
            Kernel(window, FrequencySet.nonneg()),
        ))


def derivative_samples(f, n_min: int, n_max: int):
    """Exact derivative-sampling values for a trig polynomial f.

    With F(xi) = integral f(x) e^{-2 pi i xi x} dx, the samples are
    F(n) = f-hat(n) for n in [0, n_max] and -F'(n)/(2 pi i) =
    (x f)-hat(n) for n in [n_min, -1], the latter through convolution of
    f's coefficients with the sawtooth coefficients.

    Returns:
        (nonneg, neg): arrays over n in [0, n_max] and [n_min, -1].
    """
    if isinstance(f, Constant):
        f = TrigPoly({0: f.value})
    if not isinstance(f, TrigPoly):
        raise SamplingError("derivative sampling needs a finitely supported f")
    if n_min > -1 or n_max < 0:
        raise SamplingError(
            f"index ranges must satisfy n_min <= -1 <= 0 <= n_max, "
            f"got [{n_min}, {n_max}]")
    saw = sawtooth()
    nonneg = np.array([f.fourier_coeff(n) for n in range(0, n_max + 1)], dtype=complex)
    neg = np.empty(-n_min, dtype=complex)
    for i, n in enumerate(range(n_min, 0)):
        neg[i] = sum(c * saw.fourier_coeff(n - j) for j, c in f.coeffs.items())
    return nonneg, neg


def _x_squared_hat(m: int) -> float:
    # Fourier coefficients of x^2 on [-1/2, 1/2]
    if m == 0:
        return 1.0 / 12.0
    return (-1.0) ** (m % 2) / (2.0 * math.pi * math.pi * m * m)


def even_subspace_bound(M: int) -> float:
    """Minimal Rayleigh quotient of the derivative-sampling form on even f.

    For even f the form Q(f) = sum_{n>=0}|f-hat(n)|^2 +
    sum_{n<0}|(x f)-hat(n)|^2 collapses exactly: the first sum is
    (||f||^2 + |f-hat(0)|^2)/2 and, because x f is odd, the second is
    ||x f||^2 / 2.  In the orthonormal basis {1, sqrt2 cos 2 pi k x}
    the matrix is (I + e0 e0^T + X2)/2 with X2 the multiplication
    operator by x^2; all entries are exact, no truncation tail.

    M = 0 gives (2 + 1/12)/2 = 25/24 exactly; every M stays above 1/2
    because X2 is positive semidefinite.
    """
    M = int(M)
    if M < 0:
        raise SamplingError(f"M must be >= 0, got {M}")
    dim = M + 1
    X2 = np.empty((dim, dim))
    X2[0, 0] = _x_squared_hat(0)
    for k in range(1, dim):
        X2[0, k] = X2[k, 0] = math.sqrt(2.0) * _x_squared_hat(k)
        for l in range(1, dim):
            X2[k, l] = _x_squared_hat(k - l) + _x_squared_hat(k + l)
    Q = 0.5 * (np.eye(dim) + X2)
    Q[0, 0] += 0.5
    return float(np.linalg.eigvalsh(Q)[0])


def full_space_rayleigh(M: int) -> float:
    """Minimal Rayleigh quotient of the derivative-sampling form over all
    trig polynomials of degree <= M (no evenness restriction).

    This is exactly the lower frame estimate of F(sawtooth) on the same
    subspace; it decreases toward zero, which is the instability that
    the even-subspace restriction repairs.
    """
    return frame_bounds_subspace(sawtooth(), M).A_M
