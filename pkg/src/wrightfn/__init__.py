"""Four-parameter Wright functions and their geometric properties on the disk.

The submodules are layered:

* :mod:`.gamma` and :mod:`.series` evaluate the functions with certified
  truncation bounds;
* :mod:`.foxwright` holds the Fox-Wright majorants and their enclosure;
* :mod:`.criteria` turns the sufficient conditions into hypothesis ledgers;
* :mod:`.oracle` samples the disk to look for counterexamples;
* :mod:`.zeros` locates the zeros of partial sums;
* :mod:`.sweeps` and :mod:`.plot` produce tables and pictures.
"""

from .criteria import (
    CRITERIA,
    CriterionReport,
    Family,
    Verdict,
    family_params,
    family_preset,
    run_criteria,
)
from .errors import ConvergenceError, DomainError, MonotonicityError, TruncationError
from .foxwright import BoundResult, PsiMoments, bound_conditions, psi_moments, two_sided_bound
from .gamma import WrightParams, coeff_alpha, log_gamma
from .oracle import GridSpec, PropertyCheck, SequenceSpec, check_property, default_grid
from .properties import PropertyKind, PropertyRegion, Region
from .series import (
    FoxWrightSpec,
    SeriesValue,
    Wright2Params,
    bessel_normalized,
    eval_1F2,
    eval_fox_wright,
    eval_normalized,
    eval_normalized_deriv,
    eval_wright2,
    eval_wright4,
    partial_sum,
    partial_sum_coefficients,
    two_param_normalized,
    wright_map,
)
from .sweeps import SweepSpec, boundary_bisect, run_sweep
from .zeros import PolyCoeffs, RootsReport, find_roots, kakeya_applicable, verify_exterior

__version__ = "0.1.0"

__all__ = [
    "CRITERIA", "CriterionReport", "Family", "Verdict", "family_params", "family_preset",
    "run_criteria", "ConvergenceError", "DomainError", "MonotonicityError", "TruncationError",
    "BoundResult", "PsiMoments", "bound_conditions", "psi_moments", "two_sided_bound",
    "WrightParams", "coeff_alpha", "log_gamma", "GridSpec", "PropertyCheck", "SequenceSpec",
    "check_property", "default_grid", "PropertyKind", "PropertyRegion", "Region",
    "FoxWrightSpec", "SeriesValue", "Wright2Params", "bessel_normalized", "eval_1F2",
    "eval_fox_wright", "eval_normalized", "eval_normalized_deriv", "eval_wright2",
    "eval_wright4", "partial_sum", "partial_sum_coefficients", "two_param_normalized",
    "wright_map", "SweepSpec", "boundary_bisect", "run_sweep", "PolyCoeffs", "RootsReport",
    "find_roots", "kakeya_applicable", "verify_exterior",
]
