"""Rational and polynomial approximation toolkit.

Greedy barycentric rational fitting, Arnoldi-orthogonalized polynomial
least squares, potential-field error analysis, and a convergence-study
harness with six built-in experiments.
"""

from .aaa import (
    BarycentricRational,
    FitReport,
    aaa_fit,
    cleanup,
    evaluate,
    poles,
    residues,
    zeros,
)
from .analysis import (
    ConvergenceRecord,
    Method,
    RateClass,
    classify_rate,
    convergence_study,
    estimate_sup_error,
)
from .geometry import (
    Disk,
    FunctionSpec,
    Horseshoe,
    Interval,
    SampleSet,
    boundary_samples,
    eval_function,
    sample_function,
    test_grid,
)
from .polyfit import ArnoldiPolynomial, va_eval, va_fit
from .potential import (
    ContourSpec,
    PotentialField,
    phi,
    potential_gap,
    potential_grid,
    walsh_error,
)

__version__ = "0.1.0"

__all__ = [
    "BarycentricRational", "FitReport", "aaa_fit", "cleanup", "evaluate",
    "poles", "residues", "zeros",
    "ConvergenceRecord", "Method", "RateClass", "classify_rate",
    "convergence_study", "estimate_sup_error",
    "Disk", "FunctionSpec", "Horseshoe", "Interval", "SampleSet",
    "boundary_samples", "eval_function", "sample_function", "test_grid",
    "ArnoldiPolynomial", "va_eval", "va_fit",
    "ContourSpec", "PotentialField", "phi", "potential_gap",
    "potential_grid", "walsh_error",
]
