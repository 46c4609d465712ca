"""Window specifications for the split exponential system on [-1/2, 1/2].

The objects here describe the window g of the system

    F(g) = {e^{2 pi i n x} : n >= 0}  union  {g(x) e^{2 pi i n x} : n < 0}

acting on L^2[-1/2, 1/2].  Everything downstream (finite sections, frame
bound estimates, sampling experiments) consumes g through its Fourier
coefficients

    b_n = integral over [-1/2, 1/2] of g(x) exp(-2 pi i n x) dx,

so the window universe is restricted to kinds whose coefficients have
exact closed forms and controlled tails:

* :class:`TrigPoly`:      finitely supported coefficient map {n: b_n};
* :class:`PiecewisePoly`: real piecewise polynomial covering [-1/2, 1/2];
* :class:`Modulated`:     g(x) = exp(2 pi i xi x), so b_n = sinc(xi - n);
* :class:`Constant`:      g identically equal to a complex constant.

:func:`sawtooth` (g(x) = x) and :func:`sign_window` build the two
piecewise windows used throughout the experiments.  Windows are
immutable and every operation is pure, so instances can be shared
freely between workers.
"""

from __future__ import annotations

import cmath
import json
import math
from fractions import Fraction

import numpy as np

_DOMAIN_TOL = 1e-12
_REAL_TOL = 1e-13
_SINC_SERIES_CUT = 1e-8


class WindowError(ValueError):
    """Base class for window construction and usage errors."""


class NotRealValuedError(WindowError):
    """A real-only operation was applied to a complex-valued window."""


class DomainError(WindowError):
    """Evaluation was requested outside [-1/2, 1/2]."""


class WindowFormatError(WindowError):
    """A JSON window specification is malformed."""


def sinc(u: float) -> float:
    """Normalized sinc, sin(pi u) / (pi u), with sinc(0) = 1.

    A two-term series takes over below 1e-8 to avoid 0/0; the truncation
    error there is O(u^4), far below double precision.
    """
    if abs(u) < _SINC_SERIES_CUT:
        v = math.pi * u
        return 1.0 - v * v / 6.0
    return math.sin(math.pi * u) / (math.pi * u)


def _check_domain(xs: np.ndarray) -> None:
    if np.any(np.abs(xs) > 0.5 + _DOMAIN_TOL):
        worst = float(np.max(np.abs(xs)))
        raise DomainError(f"evaluation point with |x| = {worst} outside [-1/2, 1/2]")


def _fmt_complex(c: complex) -> str:
    return f"{c.real:g}{c.imag:+g}j"


def _bracketed_newton(f, fprime, a: float, b: float, iters: int = 60) -> float:
    """Root of f in [a, b] given a sign change; Newton with bisection fallback."""
    fa = f(a)
    x = 0.5 * (a + b)
    for _ in range(iters):
        fx = f(x)
        if fx == 0.0:
            return x
        if fa * fx < 0.0:
            b = x
        else:
            a, fa = x, fx
        d = fprime(x)
        x_new = x - fx / d if d != 0.0 else 0.5 * (a + b)
        if not a < x_new < b:
            x_new = 0.5 * (a + b)
        if abs(x_new - x) < 1e-16:
            return x_new
        x = x_new
    return x


class IntervalHull:
    """Closed interval [lo, hi]; for a real window this is [essinf g, esssup g]."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: float, hi: float):
        if lo > hi:
            raise ValueError(f"hull endpoints out of order: {lo} > {hi}")
        self.lo = float(lo)
        self.hi = float(hi)

    def contains(self, y: float) -> bool:
        return self.lo <= y <= self.hi

    def __iter__(self):
        return iter((self.lo, self.hi))

    def __eq__(self, other):
        return isinstance(other, IntervalHull) and (self.lo, self.hi) == (other.lo, other.hi)

    def __repr__(self):
        return f"IntervalHull({self.lo}, {self.hi})"


class WindowSpec:
    """Base class for symbolic windows.  Subclasses are immutable."""

    def fourier_coeff(self, n: int) -> complex:
        """Exact coefficient b_n = integral g(x) exp(-2 pi i n x) dx."""
        raise NotImplementedError

    def evaluate(self, x):
        """Pointwise value of g; accepts scalars or arrays inside [-1/2, 1/2]."""
        raise NotImplementedError

    def reflect_conj(self) -> "WindowSpec":
        """The window conj(g(-x)), whose coefficients are conj(b_n)."""
        raise NotImplementedError

    @property
    def is_real(self) -> bool:
        raise NotImplementedError

    @property
    def is_zero(self) -> bool:
        raise NotImplementedError

    @property
    def sup_norm(self) -> float:
        """Exact essential sup norm of g."""
        raise NotImplementedError

    @property
    def label(self) -> str:
        """Short comma-free identifier, stable across runs (used in CSV)."""
        raise NotImplementedError

    def real_hull(self) -> IntervalHull:
        """[essinf g, esssup g] for a real-valued window.

        Raises:
            NotRealValuedError: if the window is not real-valued.
        """
        if not self.is_real:
            raise NotRealValuedError(f"window {self.label} is not real-valued")
        return self._hull()

    def _hull(self) -> IntervalHull:
        raise NotImplementedError

    def support_radius(self):
        """Largest |n| with b_n possibly nonzero, or None when unbounded."""
        return None

    def min_tail_index(self) -> int:
        """Smallest j0 >= 1 for which coeff_sq_tail(j0) is certifiable."""
        return 1

    def coeff_sq_tail(self, j0: int) -> float:
        """Rigorous upper bound on sum over j >= j0 of |b_j|^2 (j0 >= 1)."""
        raise NotImplementedError

    def __str__(self):
        return self.label

    def __repr__(self):
        return self.label


class TrigPoly(WindowSpec):
    """Finite trigonometric polynomial g = sum b_n exp(2 pi i n x).

    Coefficients equal to exactly zero are dropped at construction, so
    the stored map carries no explicit zeros.
    """

    def __init__(self, coeffs):
        items = coeffs.items() if hasattr(coeffs, "items") else coeffs
        cleaned = {}
        for n, c in items:
            c = complex(c)
            if c != 0:
                cleaned[int(n)] = c
        self._coeffs = dict(sorted(cleaned.items()))

    @property
    def coeffs(self) -> dict:
        return dict(self._coeffs)

    @property
    def support(self) -> tuple:
        return tuple(self._coeffs)

    def fourier_coeff(self, n: int) -> complex:
        return self._coeffs.get(int(n), 0.0 + 0.0j)

    def evaluate(self, x):
        xs = np.asarray(x, dtype=float)
        scalar = xs.ndim == 0
        xs = np.atleast_1d(xs)
        _check_domain(xs)
        vals = np.zeros(xs.shape, dtype=complex)
        for n, c in self._coeffs.items():
            vals += c * np.exp(2j * np.pi * n * xs)
        return complex(vals[0]) if scalar else vals

    def reflect_conj(self) -> "TrigPoly":
        return TrigPoly({n: c.conjugate() for n, c in self._coeffs.items()})

    @property
    def is_real(self) -> bool:
        for n, c in self._coeffs.items():
            if abs(self._coeffs.get(-n, 0.0 + 0.0j) - c.conjugate()) > _REAL_TOL:
                return False
        return True

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def support_radius(self) -> int:
        return max((abs(n) for n in self._coeffs), default=0)

    def coeff_sq_tail(self, j0: int) -> float:
        return sum(abs(c) ** 2 for n, c in self._coeffs.items() if n >= j0)

    def _deriv_eval(self, x: float, order: int) -> float:
        # real part suffices: only called for real-valued windows
        total = 0.0 + 0.0j
        for n, c in self._coeffs.items():
            total += c * (2j * np.pi * n) ** order * cmath.exp(2j * np.pi * n * x)
        return total.real

    def _hull(self) -> IntervalHull:
        if self.is_zero:
            return IntervalHull(0.0, 0.0)
        degree = self.support_radius()
        if degree == 0:
            v = self._coeffs[0].real
            return IntervalHull(v, v)
        # grid fine enough to bracket every zero of the derivative, then
        # Newton refinement of each bracket
        grid = np.linspace(-0.5, 0.5, 64 * (degree + 1) + 1)
        candidates = list(grid)
        dvals = [self._deriv_eval(x, 1) for x in grid]
        f = lambda x: self._deriv_eval(x, 1)
        fp = lambda x: self._deriv_eval(x, 2)
        for i in range(len(grid) - 1):
            if dvals[i] == 0.0 or dvals[i] * dvals[i + 1] < 0.0:
                candidates.append(_bracketed_newton(f, fp, grid[i], grid[i + 1]))
        values = [self._deriv_eval(x, 0) for x in candidates]
        return IntervalHull(min(values), max(values))

    @property
    def sup_norm(self) -> float:
        if self.is_zero:
            return 0.0
        if self.is_real:
            lo, hi = self._hull()
            return max(abs(lo), abs(hi))
        # |g|^2 is a real trig polynomial with coefficients
        # c_m = sum_j b_{m+j} conj(b_j); take sqrt of its sup
        sq = {}
        for n1, c1 in self._coeffs.items():
            for n2, c2 in self._coeffs.items():
                m = n1 - n2
                sq[m] = sq.get(m, 0.0 + 0.0j) + c1 * c2.conjugate()
        hull = TrigPoly(sq)._hull()
        return math.sqrt(max(hull.hi, 0.0))

    @property
    def label(self) -> str:
        body = ";".join(f"{n}:{_fmt_complex(c)}" for n, c in self._coeffs.items())
        return "trigpoly{" + body + "}"

    def __eq__(self, other):
        return isinstance(other, TrigPoly) and self._coeffs == other._coeffs


class Piece:
    """One polynomial piece on [a, b); coefficients in ascending powers."""

    __slots__ = ("a", "b", "coeffs")

    def __init__(self, a: float, b: float, coeffs):
        self.a = float(a)
        self.b = float(b)
        cs = [float(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0.0:
            cs.pop()
        self.coeffs = tuple(cs) if cs else (0.0,)
        if not self.a < self.b:
            raise WindowFormatError(f"piece interval [{a}, {b}] is empty")

    def value(self, x):
        return np.polynomial.polynomial.polyval(x, self.coeffs)

    def deriv_coeffs(self) -> tuple:
        return tuple(j * c for j, c in enumerate(self.coeffs) if j >= 1)

    def __eq__(self, other):
        return (isinstance(other, Piece)
                and (self.a, self.b, self.coeffs) == (other.a, other.b, other.coeffs))

    def __repr__(self):
        return f"Piece({self.a}, {self.b}, {self.coeffs})"


class PiecewisePoly(WindowSpec):
    """Real piecewise-polynomial window covering [-1/2, 1/2].

    Pieces must tile the interval: sorted, contiguous to 1e-12, first
    starting at -1/2 and last ending at 1/2.
    """

    def __init__(self, pieces):
        built = []
        for p in pieces:
            built.append(p if isinstance(p, Piece) else Piece(*p))
        built.sort(key=lambda p: p.a)
        if not built:
            raise WindowFormatError("pieces list is empty")
        if abs(built[0].a + 0.5) > _DOMAIN_TOL or abs(built[-1].b - 0.5) > _DOMAIN_TOL:
            raise WindowFormatError("pieces must cover [-1/2, 1/2] exactly")
        for left, right in zip(built[:-1], built[1:]):
            if abs(left.b - right.a) > _DOMAIN_TOL:
                raise WindowFormatError(
                    f"pieces leave a gap or overlap between {left.b} and {right.a}")
        self._pieces = tuple(built)

    @property
    def pieces(self) -> tuple:
        return self._pieces

    def fourier_coeff(self, n: int) -> complex:
        n = int(n)
        total = 0.0 + 0.0j
        if n == 0:
            for p in self._pieces:
                for j, c in enumerate(p.coeffs):
                    total += c * (p.b ** (j + 1) - p.a ** (j + 1)) / (j + 1)
            return total
        # I_j = int x^j e^{alpha x} dx satisfies the one-step recursion
        # I_j = (b^j e^{alpha b} - a^j e^{alpha a}) / alpha - (j / alpha) I_{j-1}
        alpha = -2j * math.pi * n
        for p in self._pieces:
            ea = cmath.exp(alpha * p.a)
            eb = cmath.exp(alpha * p.b)
            cur = (eb - ea) / alpha
            total += p.coeffs[0] * cur
            for j in range(1, len(p.coeffs)):
                cur = (p.b ** j * eb - p.a ** j * ea) / alpha - (j / alpha) * cur
                total += p.coeffs[j] * cur
        return total

    def evaluate(self, x):
        xs = np.asarray(x, dtype=float)
        scalar = xs.ndim == 0
        xs = np.atleast_1d(xs)
        _check_domain(xs)
        starts = np.array([p.a for p in self._pieces[1:]])
        idx = np.searchsorted(starts, xs, side="right")
        vals = np.empty(xs.shape, dtype=complex)
        for i, p in enumerate(self._pieces):
            mask = idx == i
            if np.any(mask):
                vals[mask] = p.value(xs[mask])
        return complex(vals[0]) if scalar else vals

    def reflect_conj(self) -> "PiecewisePoly":
        flipped = []
        for p in self._pieces:
            coeffs = tuple(c if j % 2 == 0 else -c for j, c in enumerate(p.coeffs))
            flipped.append(Piece(-p.b, -p.a, coeffs))
        return PiecewisePoly(flipped)

    @property
    def is_real(self) -> bool:
        return True

    @property
    def is_zero(self) -> bool:
        return all(all(c == 0.0 for c in p.coeffs) for p in self._pieces)

    def _critical_points(self, p: Piece) -> list:
        points = [p.a, p.b]
        dc = p.deriv_coeffs()
        if dc and any(c != 0.0 for c in dc):
            roots = np.roots(dc[::-1])
            for r in roots:
                if abs(r.imag) <= 1e-10 * (1.0 + abs(r.real)):
                    xr = float(r.real)
                    if p.a - _DOMAIN_TOL <= xr <= p.b + _DOMAIN_TOL:
                        points.append(min(max(xr, p.a), p.b))
        return points

    def _hull(self) -> IntervalHull:
        values = []
        for p in self._pieces:
            values.extend(float(p.value(x)) for x in self._critical_points(p))
        return IntervalHull(min(values), max(values))

    @property
    def sup_norm(self) -> float:
        lo, hi = self._hull()
        return max(abs(lo), abs(hi))

    def coeff_envelope(self) -> float:
        """C with |b_n| <= C / |n| for all n != 0.

        One integration by parts gives 2 pi |n| |b_n| <= (sum of jump
        magnitudes, including the wrap-around jump at +-1/2) + total
        variation of g, and the total variation of a piecewise
        polynomial is the sum of |increments| between monotone runs.
        """
        jumps = abs(float(self._pieces[0].value(self._pieces[0].a))
                    - float(self._pieces[-1].value(self._pieces[-1].b)))
        for left, right in zip(self._pieces[:-1], self._pieces[1:]):
            jumps += abs(float(right.value(right.a)) - float(left.value(left.b)))
        variation = 0.0
        for p in self._pieces:
            xs = sorted(set(self._critical_points(p)))
            for x0, x1 in zip(xs[:-1], xs[1:]):
                variation += abs(float(p.value(x1)) - float(p.value(x0)))
        return (jumps + variation) / (2.0 * math.pi)

    def coeff_sq_tail(self, j0: int) -> float:
        if j0 < 1:
            raise ValueError(f"tail index {j0} must be >= 1")
        env = self.coeff_envelope()
        return env * env * (1.0 / (j0 * j0) + 1.0 / j0)

    @property
    def label(self) -> str:
        body = ";".join(
            f"[{p.a:g}:{p.b:g}](" + "|".join(f"{c:g}" for c in p.coeffs) + ")"
            for p in self._pieces)
        return "piecewise{" + body + "}"

    def __eq__(self, other):
        return isinstance(other, PiecewisePoly) and self._pieces == other._pieces


class Modulated(WindowSpec):
    """Pure modulation g(x) = exp(2 pi i xi x); b_n = sinc(xi - n).

    xi may be an int, float, or Fraction; the exact representation is
    kept so the classifier can decide half-integer membership exactly.
    """

    def __init__(self, xi):
        if isinstance(xi, (int, Fraction)):
            self._xi = xi
        else:
            self._xi = float(xi)
        self._xi_float = float(xi)

    @property
    def xi(self):
        return self._xi

    def fourier_coeff(self, n: int) -> complex:
        return complex(sinc(self._xi_float - int(n)))

    def evaluate(self, x):
        xs = np.asarray(x, dtype=float)
        scalar = xs.ndim == 0
        xs = np.atleast_1d(xs)
        _check_domain(xs)
        vals = np.exp(2j * np.pi * self._xi_float * xs)
        return complex(vals[0]) if scalar else vals

    def reflect_conj(self) -> "Modulated":
        return self

    @property
    def is_real(self) -> bool:
        return self._xi_float == 0.0

    @property
    def is_zero(self) -> bool:
        return False

    @property
    def sup_norm(self) -> float:
        return 1.0

    def _hull(self) -> IntervalHull:
        return IntervalHull(1.0, 1.0)

    def min_tail_index(self) -> int:
        return max(1, math.floor(self._xi_float) + 2)

    def coeff_sq_tail(self, j0: int) -> float:
        d = j0 - self._xi_float
        if d < 1.0:
            raise ValueError(
                f"tail index {j0} too small for xi = {self._xi_float}; "
                f"need j0 >= xi + 1")
        # |sinc(xi - j)| <= 1 / (pi (j - xi)) for j > xi, summed by
        # first term plus integral comparison
        pi2 = math.pi * math.pi
        return (1.0 / (d * d) + 1.0 / d) / pi2

    @property
    def label(self) -> str:
        xi = self._xi
        return f"modulated({xi})" if isinstance(xi, Fraction) else f"modulated({xi:g})"

    def __eq__(self, other):
        return isinstance(other, Modulated) and self._xi == other._xi


class Constant(WindowSpec):
    """Constant window g identically c; b_n = c when n = 0, else 0."""

    def __init__(self, c):
        self._c = complex(c)

    @property
    def value(self) -> complex:
        return self._c

    def fourier_coeff(self, n: int) -> complex:
        return self._c if int(n) == 0 else 0.0 + 0.0j

    def evaluate(self, x):
        xs = np.asarray(x, dtype=float)
        scalar = xs.ndim == 0
        xs = np.atleast_1d(xs)
        _check_domain(xs)
        vals = np.full(xs.shape, self._c, dtype=complex)
        return complex(vals[0]) if scalar else vals

    def reflect_conj(self) -> "Constant":
        return Constant(self._c.conjugate())

    @property
    def is_real(self) -> bool:
        return abs(self._c.imag) <= _REAL_TOL * max(1.0, abs(self._c))

    @property
    def is_zero(self) -> bool:
        return self._c == 0

    @property
    def sup_norm(self) -> float:
        return abs(self._c)

    def _hull(self) -> IntervalHull:
        return IntervalHull(self._c.real, self._c.real)

    def support_radius(self) -> int:
        return 0

    def coeff_sq_tail(self, j0: int) -> float:
        return 0.0

    @property
    def label(self) -> str:
        return f"constant({_fmt_complex(self._c)})"

    def __eq__(self, other):
        return isinstance(other, Constant) and self._c == other._c


def sawtooth() -> PiecewisePoly:
    """The window g(x) = x on [-1/2, 1/2]."""
    return PiecewisePoly([Piece(-0.5, 0.5, (0.0, 1.0))])


def sign_window() -> PiecewisePoly:
    """The window g = -1 on [-1/2, 0), +1 on [0, 1/2]."""
    return PiecewisePoly([Piece(-0.5, 0.0, (-1.0,)), Piece(0.0, 0.5, (1.0,))])


def parse_xi(text):
    """Parse a xi argument: 'p/q' stays exact, anything else is a float.

    Exact rationals are the only way to land on the measure-zero
    half-integer boundary deliberately; plain decimals stay floats and
    are treated exactly at their binary value.
    """
    text = str(text).strip()
    if "/" in text:
        num, _, den = text.partition("/")
        try:
            return Fraction(int(num), int(den))
        except (ValueError, ZeroDivisionError) as exc:
            raise WindowFormatError(f"xi: invalid rational {text!r}") from exc
    try:
        if text.lstrip("+-").isdigit():
            return int(text)
        return float(text)
    except ValueError as exc:
        raise WindowFormatError(f"xi: invalid number {text!r}") from exc


def window_from_json(spec) -> WindowSpec:
    """Build a window from its JSON description (dict or JSON text).

    Accepted forms:
        {"kind": "trigpoly", "coeffs": [[n, re, im], ...]}
        {"kind": "piecewise_poly", "pieces": [{"a":..., "b":..., "poly":[c0,...]}, ...]}
        {"kind": "modulated", "xi": 0.75}           (xi may also be "p/q")
        {"kind": "constant", "re": 2, "im": 0}      (im optional)
        {"kind": "sawtooth"} | {"kind": "sign"}

    Raises:
        WindowFormatError: naming the offending field.
    """
    if isinstance(spec, str):
        try:
            spec = json.loads(spec)
        except json.JSONDecodeError as exc:
            raise WindowFormatError(f"window: invalid JSON ({exc})") from exc
    if not isinstance(spec, dict):
        raise WindowFormatError("window: expected a JSON object")
    kind = spec.get("kind")
    if kind == "trigpoly":
        coeffs = spec.get("coeffs")
        if not isinstance(coeffs, list):
            raise WindowFormatError("coeffs: expected a list of [n, re, im] triples")
        cleaned = {}
        for entry in coeffs:
            if not isinstance(entry, (list, tuple)) or len(entry) != 3:
                raise WindowFormatError(f"coeffs: bad entry {entry!r}")
            n, re, im = entry
            cleaned[int(n)] = cleaned.get(int(n), 0.0 + 0.0j) + complex(float(re), float(im))
        return TrigPoly(cleaned)
    if kind == "piecewise_poly":
        pieces = spec.get("pieces")
        if not isinstance(pieces, list) or not pieces:
            raise WindowFormatError("pieces: expected a nonempty list")
        built = []
        for entry in pieces:
            if not isinstance(entry, dict) or not {"a", "b", "poly"} <= set(entry):
                raise WindowFormatError(f"pieces: entry must have a, b, poly ({entry!r})")
            built.append(Piece(entry["a"], entry["b"], entry["poly"]))
        return PiecewisePoly(built)
    if kind == "modulated":
        if "xi" not in spec:
            raise WindowFormatError("xi: required for modulated windows")
        xi = spec["xi"]
        return Modulated(parse_xi(xi) if isinstance(xi, str) else xi)
    if kind == "constant":
        if "re" not in spec:
            raise WindowFormatError("re: required for constant windows")
        return Constant(complex(float(spec["re"]), float(spec.get("im", 0.0))))
    if kind == "sawtooth":
        return sawtooth()
    if kind == "sign":
        return sign_window()
    raise WindowFormatError(f"kind: unknown window kind {kind!r}")


BUILTIN_WINDOWS = {
    "sawtooth": sawtooth,
    "sign": sign_window,
    "constant_1": lambda: Constant(1.0),
    "constant_2": lambda: Constant(2.0),
    "two_plus_cos": lambda: TrigPoly({0: 2.0, 1: 0.5, -1: 0.5}),
    "x_plus_0.6": lambda: PiecewisePoly([Piece(-0.5, 0.5, (0.6, 1.0))]),
}


def parse_window(text: str) -> WindowSpec:
    """Parse a --window argument: a builtin name or a JSON object."""
    text = text.strip()
    if text in BUILTIN_WINDOWS:
        return BUILTIN_WINDOWS[text]()
    if text.startswith("{"):
        return window_from_json(text)
    raise WindowFormatError(
        f"window: {text!r} is neither a builtin name {sorted(BUILTIN_WINDOWS)} nor JSON")


def fourier_coeff(w: WindowSpec, n: int) -> complex:
    return w.fourier_coeff(n)


def evaluate(w: WindowSpec, x):
    return w.evaluate(x)


def reflect_conj(w: WindowSpec) -> WindowSpec:
    return w.reflect_conj()


def real_hull(w: WindowSpec) -> IntervalHull:
    return w.real_hull()


def sup_norm(w: WindowSpec) -> float:
    return w.sup_norm


def is_real(w: WindowSpec) -> bool:
    return w.is_real
