"""Adaptive Gauss-Legendre quadrature for complex-valued integrands.

Used as the numerical oracle for Fourier coefficients and for the
inner products of the completeness witness, whose integrand carries an
integrable power singularity at both endpoints when the exponent of the
cosine factor is negative.  Integrands must accept numpy arrays and
return complex arrays.
"""

from __future__ import annotations

import numpy as np

_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(15)


def _panel(f, a: float, b: float) -> complex:
    half = 0.5 * (b - a)
    x = 0.5 * (a + b) + half * _NODES
    return half * complex(np.sum(_WEIGHTS * np.asarray(f(x))))


def integrate(f, a: float, b: float, tol: float = 1e-12, max_depth: int = 50) -> complex:
    """Adaptive bisection with a 15-point Gauss-Legendre rule per panel.

    Args:
        f: vectorized integrand, array in, complex array out.
        a, b: integration limits, a < b.
        tol: absolute tolerance target for the whole interval.
        max_depth: recursion cap; panels at the cap are accepted as is.

    Returns:
        Approximation to the integral of f over [a, b].
    """
    def recurse(lo: float, hi: float, whole: complex, budget: float, depth: int) -> complex:
        mid = 0.5 * (lo + hi)
        left = _panel(f, lo, mid)
        right = _panel(f, mid, hi)
        if depth >= max_depth or abs(left + right - whole) <= budget:
            return left + right
        half_budget = 0.5 * budget
        return (recurse(lo, mid, left, half_budget, depth + 1)
                + recurse(mid, hi, right, half_budget, depth + 1))

    return recurse(a, b, _panel(f, a, b), tol, 0)


def integrate_endpoint_refined(f, a: float, b: float, tol: float = 1e-10,
                               levels: int = 68) -> complex:
    """Integrate with dyadic panel refinement toward both endpoints.

    Intended for integrands bounded by C * (x - a)^p near a (and the
    mirror image near b) with p > -1/2.  Panels accumulate geometrically
    down to width (b - a) * 2^-levels at each endpoint; the uncovered
    slivers contribute O(2^(-levels * (1 + p))), below tol for the
    default depth.  Each panel is handled by the adaptive rule.
    """
    half = 0.5 * (b - a)
    points = [a + half * 2.0 ** (-k) for k in range(levels, -1, -1)]
    points += [b - half * 2.0 ** (-k) for k in range(1, levels + 1)]
    per_panel = tol / len(points)
    total = 0.0 + 0.0j
    for lo, hi in zip(points[:-1], points[1:]):
        total += integrate(f, lo, hi, tol=per_panel)
    return total
