"""Symbolic classification of the split system F(g).

The status of F(g) (complete / frame / Riesz basis) is equivalent to
spectral properties of the Toeplitz operator T_g with symbol g:

    complete      <=>  T_g injective (0 not in the point spectrum),
    frame         <=>  T_g bounded and bounded below,
    Riesz basis   <=>  T_g bounded and invertible.

Two window families admit a full decision procedure: real-valued
windows, where the spectrum of T_g is the interval [essinf g, esssup g]
and injectivity always holds, and pure modulations g(x) = e^{2 pi i xi x},
where everything reduces to the geometry of a perturbed integer
frequency set.  Anything else is reported as Unknown: invertibility of
a general Toeplitz operator is governed by the Helson-Szego condition,
which has no finitely checkable form.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .windows import Constant, Modulated, WindowSpec


class Status(str, Enum):
    NOT_BESSEL = "NotBessel"
    INCOMPLETE = "Incomplete"
    COMPLETE_ONLY = "CompleteOnly"
    FRAME_NOT_RIESZ = "FrameNotRiesz"
    RIESZ_BASIS = "RieszBasis"
    UNKNOWN = "Unknown"


class InconsistentFlagsError(ValueError):
    """ToeplitzVerdict flags violate invertible => bounded below => injective."""


@dataclass(frozen=True)
class ToeplitzVerdict:
    """Spectral flags for T_g; None means undecided."""

    injective: bool | None
    bounded_below: bool | None
    invertible: bool | None

    def to_json(self) -> dict:
        return {
            "injective": self.injective,
            "bounded_below": self.bounded_below,
            "invertible": self.invertible,
        }


@dataclass(frozen=True)
class Verdict:
    status: Status
    toeplitz: ToeplitzVerdict
    citation: str

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "toeplitz": self.toeplitz.to_json(),
            "citation": self.citation,
        }


_CITE_REAL_SPAN = (
    "Hartman-Wintner spectral interval for real symbols plus the Coburn "
    "alternative: 0 lies in [essinf g, esssup g], so T_g is injective but "
    "not bounded below")
_CITE_REAL_GAP = (
    "Hartman-Wintner spectral interval for real symbols: 0 lies outside "
    "[essinf g, esssup g], so T_g is invertible")
_CITE_SCALAR = "scalar symbol: T_g is c times the identity with c != 0"
_CITE_ZERO = (
    "zero window: the system degenerates to the one-sided exponentials, "
    "which span the proper Hardy subspace H^2 of L^2")
_CITE_UNKNOWN = (
    "Helson-Szego / Widom-Devinatz invertibility condition: no finitely "
    "checkable criterion is implemented for general complex symbols")
_CITE_XI_INCOMPLETE = (
    "Levinson-type witness: for xi < -1/2 the shifted frequency set leaves "
    "an L^2 function orthogonal to every system element")
_CITE_XI_KADEC = (
    "Kadec 1/4 theorem: the shifted frequencies satisfy |lambda_n - n| = "
    "|xi|/2 < 1/4")
_CITE_XI_EXACT = (
    "Redheffer-Young exactness at the quarter shift: complete but not a "
    "frame (with finitely many extra elements for larger half-integers)")
_CITE_XI_EXCESS = (
    "Kadec 1/4 theorem plus finite excess: a quarter-perturbed Riesz basis "
    "with extra elements is a frame but not minimal")


def _exact(xi) -> Fraction:
    # Fraction(float) is exact at the binary value, so floats are treated
    # as half-integers only when bit-equal to one
    return Fraction(xi)


def _is_half_integer(fr: Fraction) -> bool:
    doubled = 2 * fr
    return doubled.denominator == 1 and doubled.numerator % 2 == 1


def toeplitz_verdict_modulated(xi) -> ToeplitzVerdict:
    """Spectral flags of T_g for g(x) = e^{2 pi i xi x}.

    Four regimes: not injective below -1/2; invertible strictly inside
    (-1/2, 1/2); injective but not bounded below at every half-integer
    xi = -1/2 + n with n >= 0; injective and bounded below but not
    surjective for the remaining xi > 1/2.
    """
    fr = _exact(xi)
    if fr < Fraction(-1, 2):
        return ToeplitzVerdict(injective=False, bounded_below=False, invertible=False)
    if _is_half_integer(fr):
        return ToeplitzVerdict(injective=True, bounded_below=False, invertible=False)
    if fr < Fraction(1, 2):
        return ToeplitzVerdict(injective=True, bounded_below=True, invertible=True)
    return ToeplitzVerdict(injective=True, bounded_below=True, invertible=False)


def classify_modulated(xi) -> Verdict:
    """Classify F(g) for the pure modulation g(x) = e^{2 pi i xi x}.

    Half-integer membership is decided exactly: Fractions exactly,
    floats at their binary value (so -0.5 as a float is the boundary
    case, while -0.5 + 1e-12 is not).
    """
    fr = _exact(xi)
    tv = toeplitz_verdict_modulated(xi)
    status = verdict_from_toeplitz(tv, bounded_symbol=True)
    if fr < Fraction(-1, 2):
        citation = _CITE_XI_INCOMPLETE
    elif _is_half_integer(fr):
        citation = _CITE_XI_EXACT
    elif fr < Fraction(1, 2):
        citation = _CITE_XI_KADEC
    else:
        citation = _CITE_XI_EXCESS
    return Verdict(status, tv, citation)


def verdict_from_toeplitz(tv: ToeplitzVerdict, bounded_symbol: bool) -> Status:
    """Map Toeplitz flags to a system status.

    Raises:
        InconsistentFlagsError: if the known flags violate
            invertible => bounded_below => injective.
    """
    if tv.invertible is True and tv.bounded_below is False:
        raise InconsistentFlagsError("invertible requires bounded below")
    if tv.bounded_below is True and tv.injective is False:
        raise InconsistentFlagsError("bounded below requires injective")
    if tv.invertible is True and tv.injective is False:
        raise InconsistentFlagsError("invertible requires injective")
    if not bounded_symbol:
        return Status.NOT_BESSEL
    if tv.injective is False:
        return Status.INCOMPLETE
    if tv.invertible is True:
        return Status.RIESZ_BASIS
    if tv.bounded_below is True:
        return Status.FRAME_NOT_RIESZ if tv.invertible is False else Status.UNKNOWN
    if tv.injective is True and tv.bounded_below is False:
        return Status.COMPLETE_ONLY
    return Status.UNKNOWN


def classify(w: WindowSpec) -> Verdict:
    """Classify F(g) for a window of any supported kind.

    Real-valued windows follow the spectral-interval rule, modulations
    follow the exact xi regimes, nonzero complex constants are scalar
    multiples of the identity, and any other complex window is Unknown.
    """
    if isinstance(w, Modulated):
        return classify_modulated(w.xi)
    if w.is_zero:
        return Verdict(
            Status.INCOMPLETE,
            ToeplitzVerdict(injective=False, bounded_below=False, invertible=False),
            _CITE_ZERO)
    if w.is_real:
        hull = w.real_hull()
        if hull.contains(0.0):
            return Verdict(
                Status.COMPLETE_ONLY,
                ToeplitzVerdict(injective=True, bounded_below=False, invertible=False),
                _CITE_REAL_SPAN)
        return Verdict(
            Status.RIESZ_BASIS,
            ToeplitzVerdict(injective=True, bounded_below=True, invertible=True),
            _CITE_REAL_GAP)
    if isinstance(w, Constant):
        return Verdict(
            Status.RIESZ_BASIS,
            ToeplitzVerdict(injective=True, bounded_below=True, invertible=True),
            _CITE_SCALAR)
    return Verdict(
        Status.UNKNOWN,
        ToeplitzVerdict(injective=None, bounded_below=None, invertible=None),
        _CITE_UNKNOWN)
