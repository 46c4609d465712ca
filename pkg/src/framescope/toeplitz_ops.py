"""Finite sections of the operators attached to a window.

For a window g with coefficients b_n, the split system F(g) has an
analysis operator that acts blockwise: a Toeplitz block for the
reflected-conjugate window, a Hankel cross block, and an identity block.
This module builds dense N x N (and 2N x 2N) sections of those
operators, summarizes their spectra, and evaluates the lower-bound
constant for abstract block matrices of that shape.

Section sizes are capped by the FRAMESCOPE_MAX_N environment variable
(default 2048): the module only ever does dense linear algebra.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

from .windows import WindowSpec

MAX_N_ENV = "FRAMESCOPE_MAX_N"
DEFAULT_MAX_N = 2048
_HERMITIAN_TOL = 1e-12


class SectionError(ValueError):
    """Base class for finite-section errors."""


class NonSquareError(SectionError):
    """Spectral summary requested for a non-square matrix."""


class NonPositiveC1Error(SectionError):
    """block_lower_bound needs a strictly positive c1."""


class SectionTooLargeError(SectionError):
    """Requested section exceeds the FRAMESCOPE_MAX_N cap."""


def max_section_order() -> int:
    raw = os.environ.get(MAX_N_ENV)
    if raw is None:
        return DEFAULT_MAX_N
    try:
        cap = int(raw)
    except ValueError as exc:
        raise SectionError(f"{MAX_N_ENV}: invalid integer {raw!r}") from exc
    if cap < 1:
        raise SectionError(f"{MAX_N_ENV}: cap must be >= 1, got {cap}")
    return cap


def _check_dim(dim: int) -> None:
    cap = max_section_order()
    if dim > cap:
        raise SectionTooLargeError(
            f"section dimension {dim} exceeds {MAX_N_ENV} = {cap}")


def _check_order(n) -> int:
    n = int(n)
    if n < 1:
        raise SectionError(f"N must be >= 1, got {n}")
    return n


@dataclass(frozen=True)
class FiniteSection:
    """Dense section with its construction recipe attached."""

    data: np.ndarray
    recipe: str
    window: WindowSpec
    order: int

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]


@dataclass(frozen=True)
class SpectralSummary:
    """Singular extremes, plus eigenvalues when the matrix is Hermitian."""

    sigma_min: float
    sigma_max: float
    hermitian_eigs: np.ndarray | None

    @property
    def is_hermitian(self) -> bool:
        return self.hermitian_eigs is not None


def _coeff_array(w: WindowSpec, lo: int, hi: int) -> np.ndarray:
    return np.array([w.fourier_coeff(n) for n in range(lo, hi + 1)], dtype=complex)


def toeplitz_section(w: WindowSpec, N: int) -> FiniteSection:
    """N x N section with entry(i, j) = b_{i-j} (rows index the output frequency)."""
    N = _check_order(N)
    _check_dim(N)
    b = _coeff_array(w, -(N - 1), N - 1)
    idx = np.subtract.outer(np.arange(N), np.arange(N)) + (N - 1)
    return FiniteSection(b[idx], "toeplitz", w, N)


def hankel_section(w: WindowSpec, N: int) -> FiniteSection:
    """N x N section with entry(i, j) = conj(b_{i+j+1})."""
    N = _check_order(N)
    _check_dim(N)
    b = np.conj(_coeff_array(w, 1, 2 * N - 1))
    idx = np.add.outer(np.arange(N), np.arange(N))
    return FiniteSection(b[idx], "hankel", w, N)


def analysis_section(w: WindowSpec, N: int) -> FiniteSection:
    """2N x 2N block section [[T-tilde, H], [0, I]] of the analysis operator.

    The top-left block is the Toeplitz section of the reflected-conjugate
    window, which equals the entrywise conjugate of the plain Toeplitz
    section (coefficients of conj(g(-x)) are conj(b_n)).
    """
    N = _check_order(N)
    _check_dim(2 * N)
    top_left = np.conj(toeplitz_section(w, N).data)
    top_right = hankel_section(w, N).data
    data = np.zeros((2 * N, 2 * N), dtype=complex)
    data[:N, :N] = top_left
    data[:N, N:] = top_right
    data[N:, N:] = np.eye(N)
    return FiniteSection(data, "analysis_block", w, N)


def spectral_summary(section) -> SpectralSummary:
    """Dense SVD extremes; Hermitian eigenvalues (ascending) when applicable.

    Accepts a FiniteSection or a raw square ndarray.
    """
    data = section.data if isinstance(section, FiniteSection) else np.asarray(section)
    if data.ndim != 2 or data.shape[0] != data.shape[1]:
        raise NonSquareError(f"matrix of shape {data.shape} is not square")
    singular = np.linalg.svd(data, compute_uv=False)
    eigs = None
    if np.max(np.abs(data - data.conj().T)) <= _HERMITIAN_TOL:
        eigs = np.linalg.eigvalsh(data)
    return SpectralSummary(float(singular[-1]), float(singular[0]), eigs)


def block_lower_bound(c1: float, c2: float) -> float:
    """Lower bound on sigma_min(Phi)^2 for Phi = [[A, B], [0, I]].

    Valid whenever sigma_min(A) >= c1 and ||B|| <= c2, in the moderate
    coupling regime c2 <~ 3.7 exercised here; the sharp two-by-two worst
    case ((1 + c1^2 + c2^2) - sqrt((1 + c1^2 + c2^2)^2 - 4 c1^2)) / 2
    drops below this value for substantially larger c2.
    """
    c1 = float(c1)
    c2 = float(c2)
    if not c1 > 0:
        raise NonPositiveC1Error(f"c1 must be > 0, got {c1}")
    if c2 < 0 or not (math.isfinite(c1) and math.isfinite(c2)):
        raise SectionError(f"c2 must be finite and >= 0, got {c2}")
    if c2 == 0:
        return min(0.5 * c1 * c1, 0.5)
    return min(0.5 * c1 * c1, 0.25 * c1 * c1 / c2, 0.5)
