"""Rigorous subspace frame-bound estimation.

The frame inequality for the split system F(g) reads

    A ||f||^2  <=  sum_{n>=0} |f-hat(n)|^2 + sum_{n<0} |<f, g e_n>|^2  <=  B ||f||^2.

Restricting f to the trig-polynomial subspace span{e_k : |k| <= M}
turns the middle expression into a Hermitian quadratic form whose
extreme eigenvalues (A_M, B_M) bracket the true bounds by density:
A_M decreases toward A and B_M increases toward B as M grows.  The
infinite sum over n < 0 is truncated; every kind of window certifies an
analytic bound on the dropped (positive semidefinite) part, reported as
``tail``, so each estimate is an interval statement: the untruncated
subspace values lie within [A_M, A_M + tail] and [B_M, B_M + tail].

The same quadratic-form construction applies to plain exponential
systems E(Gamma) over a perturbed frequency set Gamma, where the matrix
entries are sums of sinc products and the tail comes from the
1/(pi |u|) envelope of sinc.  Finite-section singular values of T_g
itself are deliberately NOT used as frame evidence: for non-normal
symbols the sections can converge to the wrong quantity, while the
quadratic form cannot.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from . import quadrature
from .windows import WindowSpec

_PI2 = math.pi * math.pi


class FrameBoundError(ValueError):
    """Base class for frame-bound estimation errors."""


class UnboundedWindowError(FrameBoundError):
    """The window cannot certify a finite sup norm."""


class DeltaTooLargeError(FrameBoundError):
    """Kadec envelope requested at or beyond the 1/4 boundary."""


class TNotAdmissibleError(FrameBoundError):
    """Witness parameter t <= 1/4, where F_t leaves L^2."""


class CutoffTooSmallError(FrameBoundError):
    """Ray enumeration stops too close to the subspace frequencies."""


@dataclass(frozen=True)
class Ray:
    """Arithmetic ray {offset + direction * k : k >= start} with unit step."""

    offset: Fraction
    direction: int
    start: int

    def element(self, k: int) -> Fraction:
        return self.offset + self.direction * k

    def enumerate(self, count: int) -> list:
        return [self.element(self.start + j) for j in range(count)]

    def first_omitted(self, count: int) -> Fraction:
        return self.element(self.start + count)


@dataclass(frozen=True)
class FrequencySet:
    """Finite union of unit-step rays plus finitely many extra points.

    Offsets are kept as exact Fractions (floats convert exactly), so
    duplicate frequencies produced by ray collisions merge exactly.
    """

    rays: tuple
    extras: tuple = ()

    @staticmethod
    def of(rays, extras=()) -> "FrequencySet":
        built = tuple(
            Ray(Fraction(off), int(d), int(s)) for off, d, s in rays)
        for ray in built:
            if ray.direction not in (-1, 1):
                raise FrameBoundError(f"ray direction must be +-1, got {ray.direction}")
        return FrequencySet(built, tuple(Fraction(e) for e in extras))

    @staticmethod
    def integers() -> "FrequencySet":
        return FrequencySet.of([(0, 1, 0), (0, -1, 1)])

    @staticmethod
    def nonneg() -> "FrequencySet":
        return FrequencySet.of([(0, 1, 0)])

    @staticmethod
    def negatives() -> "FrequencySet":
        return FrequencySet.of([(0, -1, 1)])

    def enumerate(self, cutoff: int) -> np.ndarray:
        """First `cutoff` elements of each ray plus extras, merged exactly,
        sorted ascending, returned as floats."""
        seen = set()
        for ray in self.rays:
            seen.update(ray.enumerate(cutoff))
        seen.update(self.extras)
        return np.array(sorted(float(v) for v in seen))

    def integer_elements_within(self, lo: int, hi: int) -> list:
        """Sorted integer members of the set inside [lo, hi].

        Only rays with integer offsets contribute; a non-integer offset
        on a ray is rejected since sampling grids here live on Z.
        """
        out = set()
        for ray in self.rays:
            if ray.offset.denominator != 1:
                raise FrameBoundError(
                    f"ray offset {ray.offset} is not an integer sampling point")
            off = int(ray.offset)
            if ray.direction == 1:
                k_lo = max(ray.start, lo - off)
                out.update(off + k for k in range(k_lo, hi - off + 1))
            else:
                k_lo = max(ray.start, off - hi)
                out.update(off - k for k in range(k_lo, off - lo + 1))
        for e in self.extras:
            if e.denominator == 1 and lo <= e <= hi:
                out.add(int(e))
        return sorted(out)


def gamma_of_xi(xi) -> FrequencySet:
    """The shifted frequency set Gamma_xi attached to g(x) = e^{2 pi i xi x}.

    Gamma_xi = {n - xi/2 : n >= 0} union {n + xi/2 : n <= -1}; it is the
    frequency set of F(g_xi) recentered by xi/2, so the two systems are
    unitarily equivalent and share frame bounds.  At odd integer xi the
    two rays collide in one point, which merges.
    """
    half = Fraction(xi) / 2
    return FrequencySet(rays=(Ray(-half, 1, 0), Ray(half, -1, 1)))


@dataclass(frozen=True)
class FrameBoundEstimate:
    """Extreme Rayleigh quotients on span{e_k : |k| <= M} plus a tail bound.

    ``tail`` bounds the positive semidefinite part of the quadratic form
    dropped by truncation; ``rigorous`` records that the bound is
    analytic rather than heuristic.
    """

    M: int
    A_M: float
    B_M: float
    tail: float
    rigorous: bool


def _check_m(M) -> int:
    M = int(M)
    if M < 1:
        raise FrameBoundError(f"M must be >= 1, got {M}")
    return M


def frame_bounds_subspace(w: WindowSpec, M: int, n_tail: int = 256) -> FrameBoundEstimate:
    """Extreme values of the F(g) quadratic form on span{e_k : |k| <= M}.

    The form is sum_{n>=0} |f-hat(n)|^2 + sum_{n<0} |<f, g e_n>|^2 with
    <f, g e_n> = sum_k c_k conj(b_{k-n}).  Windows with finite
    coefficient support get the exact finite sum (tail 0); the others
    are truncated at n = -N_t with N_t >= n_tail chosen large enough
    for the window's coefficient-decay envelope to certify the dropped
    part.

    Args:
        w: window of any supported kind.
        M: subspace degree, M >= 1.
        n_tail: requested truncation depth for infinite-support windows.

    Returns:
        FrameBoundEstimate with A_M, B_M, tail, rigorous = True.
    """
    M = _check_m(M)
    if not math.isfinite(w.sup_norm):
        raise UnboundedWindowError(f"window {w.label} has no finite sup norm")
    ks = np.arange(-M, M + 1)
    radius = w.support_radius()
    if radius is not None:
        depth = radius + M
        tail = 0.0
    else:
        depth = max(int(n_tail), w.min_tail_index() + M + 4)
        tail = float(sum(w.coeff_sq_tail(depth + 1 + k) for k in ks))
    rows = max(depth, 1)
    V = np.empty((rows, 2 * M + 1), dtype=complex)
    for m in range(1, rows + 1):
        V[m - 1, :] = [np.conj(w.fourier_coeff(int(k) + m)) for k in ks]
    Q = np.diag((ks >= 0).astype(float)).astype(complex) + V.conj().T @ V
    eigs = np.linalg.eigvalsh(0.5 * (Q + Q.conj().T))
    return FrameBoundEstimate(M, float(eigs[0]), float(eigs[-1]), tail, True)


def exp_system_bounds(gamma: FrequencySet, M: int, cutoff: int = 512) -> FrameBoundEstimate:
    """Extreme values of the E(Gamma) quadratic form on span{e_k : |k| <= M}.

    The form is sum over lambda in Gamma of |<f, e^{2 pi i lambda x}>|^2,
    with <e_k, e_lambda> = sinc(k - lambda), assembled from each ray's
    first `cutoff` elements.  The omitted part of each ray is bounded
    through |sinc(u)| <= 1/(pi |u|): if the first omitted element is at
    distance d from a subspace frequency k, the remaining contributions
    at k sum to at most (1/pi^2)(1/d^2 + 1/d).

    Raises:
        CutoffTooSmallError: if some omitted element comes within
            distance 1 of the subspace frequencies, which would void the
            tail bound; increase cutoff past M + |offset| + 1.
    """
    M = _check_m(M)
    if int(cutoff) < 1:
        raise FrameBoundError(f"cutoff must be >= 1, got {cutoff}")
    cutoff = int(cutoff)
    lam = gamma.enumerate(cutoff)
    ks = np.arange(-M, M + 1)
    S = np.sinc(np.subtract.outer(lam, ks.astype(float)))
    Q = S.T @ S
    eigs = np.linalg.eigvalsh(0.5 * (Q + Q.T))
    tail = 0.0
    for ray in gamma.rays:
        omitted = float(ray.first_omitted(cutoff))
        for k in ks:
            d = ray.direction * (omitted - float(k))
            if d < 1.0:
                raise CutoffTooSmallError(
                    f"cutoff {cutoff} leaves ray elements within distance 1 of "
                    f"k = {int(k)}; need cutoff > M + |offset| + 1")
            tail += (1.0 / (d * d) + 1.0 / d) / _PI2
    return FrameBoundEstimate(M, float(eigs[0]), float(eigs[-1]), float(tail), True)


class KadecEnvelope(NamedTuple):
    A_low: float
    B_high: float


def kadec_envelope(delta: float) -> KadecEnvelope:
    """Quantitative Kadec bounds for |lambda_n - n| <= delta < 1/4.

    A perturbed exponential system at uniform offset delta is a Riesz
    basis with lower bound at least (cos pi delta - sin pi delta)^2 and
    upper bound at most (2 - cos pi delta + sin pi delta)^2.
    """
    delta = float(delta)
    if delta < 0:
        raise FrameBoundError(f"delta must be >= 0, got {delta}")
    if delta >= 0.25:
        raise DeltaTooLargeError(f"Kadec envelope needs delta < 1/4, got {delta}")
    c = math.cos(math.pi * delta)
    s = math.sin(math.pi * delta)
    return KadecEnvelope((c - s) ** 2, (2.0 - c + s) ** 2)


def _witness_function(t: float):
    exponent = 2.0 * t - 1.0

    def F(xs: np.ndarray) -> np.ndarray:
        return np.sin(np.pi * xs) * np.cos(np.pi * xs) ** exponent

    return F


def witness_values(t: float, n_lo: int, n_hi: int, tol: float = 1e-10) -> list:
    """Inner products of the witness F_t(x) = sin(pi x) cos^{2t-1}(pi x).

    For n >= 0 the integral is against e^{2 pi i (n + t) x}; negative n
    addresses the reflected ray, frequency -(|n| + t).  F_t is in L^2
    exactly for t > 1/4; for t < 1/2 the integrand has an integrable
    endpoint singularity handled by dyadic panel refinement.

    Returns:
        List of (n, complex value) pairs for n in [n_lo, n_hi].
    """
    t = float(t)
    if t <= 0.25:
        raise TNotAdmissibleError(f"witness needs t > 1/4, got {t}")
    if n_lo > n_hi:
        raise FrameBoundError(f"empty index range [{n_lo}, {n_hi}]")
    F = _witness_function(t)
    singular = 2.0 * t - 1.0 < 0.0
    out = []
    for n in range(int(n_lo), int(n_hi) + 1):
        freq = (n + t) if n >= 0 else -(abs(n) + t)

        def integrand(xs: np.ndarray, f=freq) -> np.ndarray:
            return F(xs) * np.exp(-2j * np.pi * f * xs)

        if singular:
            value = quadrature.integrate_endpoint_refined(integrand, -0.5, 0.5, tol=tol)
        else:
            value = quadrature.integrate(integrand, -0.5, 0.5, tol=tol)
        out.append((n, value))
    return out


def upper_beurling_density(gamma: FrequencySet) -> float:
    """Upper Beurling density of a finite union of unit-step rays.

    Far windows on either side see only the rays pointing that way;
    rays sharing an offset residue mod 1 eventually coincide and count
    once, while distinct residues contribute disjoint unit-density
    sequences that add.  Finitely many extra points never change the
    density.
    """
    plus = {ray.offset - math.floor(ray.offset) for ray in gamma.rays if ray.direction == 1}
    minus = {ray.offset - math.floor(ray.offset) for ray in gamma.rays if ray.direction == -1}
    return float(max(len(plus), len(minus)))
