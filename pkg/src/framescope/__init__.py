"""framescope: classification and numerical evidence for split
windowed-exponential systems on L2[-1/2, 1/2]."""

from .classifier import (InconsistentFlagsError, Status, ToeplitzVerdict,
                         Verdict, classify, classify_modulated,
                         toeplitz_verdict_modulated, verdict_from_toeplitz)
from .frame_bounds import (CutoffTooSmallError, DeltaTooLargeError,
                           FrameBoundEstimate, FrequencySet, Ray,
                           TNotAdmissibleError, UnboundedWindowError,
                           exp_system_bounds, frame_bounds_subspace,
                           gamma_of_xi, kadec_envelope, upper_beurling_density,
                           witness_values)
from .sampling_lab import (EmptySampleSetError, Kernel, RankDeficientError,
                           RecoveryReport, SequenceWindowPair,
                           derivative_samples, dynamical_forward,
                           dynamical_recover, even_subspace_bound,
                           forward_matrix, full_space_rayleigh, kernel_taps,
                           split_scheme)
from .toeplitz_ops import (FiniteSection, NonPositiveC1Error, NonSquareError,
                           SectionTooLargeError, SpectralSummary,
                           analysis_section, block_lower_bound, hankel_section,
                           spectral_summary, toeplitz_section)
from .windows import (BUILTIN_WINDOWS, Constant, DomainError, IntervalHull,
                      Modulated, NotRealValuedError, Piece, PiecewisePoly,
                      TrigPoly, WindowError, WindowFormatError, WindowSpec,
                      evaluate, fourier_coeff, is_real, parse_window, parse_xi,
                      real_hull, reflect_conj, sawtooth, sign_window, sup_norm,
                      window_from_json)

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_WINDOWS", "Constant", "CutoffTooSmallError", "DeltaTooLargeError",
    "DomainError", "EmptySampleSetError", "FiniteSection", "FrameBoundEstimate",
    "FrequencySet", "InconsistentFlagsError", "IntervalHull", "Kernel",
    "Modulated", "NonPositiveC1Error", "NonSquareError", "NotRealValuedError",
    "Piece", "PiecewisePoly", "RankDeficientError", "Ray", "RecoveryReport",
    "SectionTooLargeError", "SequenceWindowPair", "SpectralSummary", "Status",
    "TNotAdmissibleError", "ToeplitzVerdict", "TrigPoly", "UnboundedWindowError",
    "Verdict", "WindowError", "WindowFormatError", "WindowSpec",
    "analysis_section", "block_lower_bound", "classify", "classify_modulated",
    "derivative_samples", "dynamical_forward", "dynamical_recover",
    "evaluate", "even_subspace_bound", "exp_system_bounds", "forward_matrix",
    "fourier_coeff", "frame_bounds_subspace", "full_space_rayleigh",
    "gamma_of_xi", "hankel_section", "is_real", "kadec_envelope",
    "kernel_taps", "parse_window", "parse_xi", "real_hull", "reflect_conj",
    "sawtooth", "sign_window", "spectral_summary", "split_scheme",
    "sup_norm", "toeplitz_section", "toeplitz_verdict_modulated",
    "upper_beurling_density", "verdict_from_toeplitz", "window_from_json",
    "witness_values",
]
