"""Convergence-study harness: degree sweeps, sup-error estimates, and
classification of the observed decay regime."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import aaa as aaa_mod
from . import geometry, polyfit
from .aaa import BarycentricRational
from .geometry import FunctionSpec, SampleSet
from .polyfit import ArnoldiPolynomial


class Method(enum.Enum):
    RATIONAL = "rational"
    POLYNOMIAL = "polynomial"


class SupError(NamedTuple):
    value: float
    pole_in_domain: bool


@dataclass(frozen=True)
class Entry:
    degree: int
    method: Method
    error: float
    flag: str = "ok"        # "ok" | "floor" | "pole-in-domain"


@dataclass(frozen=True)
class ConvergenceRecord:
    fn: FunctionSpec
    domain: object
    entries: tuple

    def for_method(self, method):
        return [e for e in self.entries if e.method is method]


@dataclass(frozen=True)
class RateClass:
    """Observed decay regime of a convergence curve.

    kind is one of "superexponential", "exponential", "root-exponential",
    "algebraic".  rate is log10-decay per unit degree (exponential), per
    unit sqrt(degree) (root-exponential), or the algebraic order; it is
    None for superexponential.  diagnostics carries the three regression
    R^2 values.
    """

    kind: str
    rate: float | None
    diagnostics: dict


def estimate_sup_error(f, approximant, domain, grid_size=4000):
    """Sup of |f - approximant| over the domain's test grid.

    If the approximant is rational and has a pole inside (or within 1e-9
    of) the domain, the result is flagged and an interior grid is scanned
    as well.
    """
    grid = geometry.test_grid(domain, grid_size)
    fv = geometry.eval_function(f, grid)
    if not np.all(np.isfinite(fv.real) & np.isfinite(fv.imag)):
        raise ValueError("f is non-finite on the test grid")
    pole_in_domain = False
    if isinstance(approximant, BarycentricRational) and approximant.degree >= 1:
        pl = aaa_mod.poles(approximant)
        pole_in_domain = bool(np.any(geometry.contains(domain, pl, tol=1e-9)))
    av = approximant(grid)
    err = np.abs(fv - av)
    sup = float(np.max(np.where(np.isfinite(err), err, np.inf)))
    if pole_in_domain:
        interior = geometry.interior_grid(domain)
        fi = geometry.eval_function(f, interior)
        ok = np.isfinite(fi.real) & np.isfinite(fi.imag)
        ei = np.abs(fi[ok] - approximant(interior[ok]))
        if ei.size:
            sup = max(sup, float(np.max(np.where(np.isfinite(ei), ei, np.inf))))
    return SupError(sup, pole_in_domain)


def convergence_study(f, domain, degrees, tol_floor=1e-13, n_samples=500,
                      aaa_report=None):
    """Degree sweep of rational and polynomial sup errors.

    Rational entries come from one greedy run's trajectory (re-measured on
    the independent test grid at each recorded support set); polynomial
    entries are fresh fits per degree.  Errors below tol_floor relative to
    max|values| are kept but flagged "floor".
    """
    degrees = [int(d) for d in degrees]
    if not degrees or any(b <= a for a, b in zip(degrees, degrees[1:])):
        raise ValueError("degrees must be nonempty and strictly increasing")
    samples = geometry.sample_function(f, domain, n_samples)
    fscale = float(np.max(np.abs(samples.values)))
    floor = tol_floor * fscale

    if aaa_report is None:
        aaa_report = aaa_mod.aaa_fit(
            samples, tol=tol_floor, max_degree=max(degrees), keep_models=True
        )
    by_degree = {m.degree: m for m in aaa_report.snapshots}

    entries = []
    for n in degrees:
        model = by_degree.get(n)
        if model is not None:
            sup = estimate_sup_error(f, model, domain)
            flag = "pole-in-domain" if sup.pole_in_domain else (
                "floor" if sup.value < floor else "ok")
            entries.append(Entry(n, Method.RATIONAL, sup.value, flag))
        if samples.points.size >= n + 1:
            pmodel = polyfit.va_fit(samples, n)
            perr = estimate_sup_error(f, pmodel, domain)
            flag = "floor" if perr.value < floor else "ok"
            entries.append(Entry(n, Method.POLYNOMIAL, perr.value, flag))
    entries.sort(key=lambda e: (e.degree, e.method.value))
    return ConvergenceRecord(fn=f, domain=domain, entries=tuple(entries))


def _regress(x, y):
    slope, intercept = np.polyfit(x, y, 1)
    pred = slope * x + intercept
    ss_res = float(np.sum((y - pred) ** 2))
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    r2 = 1.0 - ss_res / ss_tot if ss_tot > 0 else 1.0
    return float(slope), max(0.0, min(1.0, r2))


def classify_rate(record, method):
    """Classify the decay of the pre-floor segment of one method's curve.

    Fits log10 E against n, sqrt(n), and log10 n; concave curvature in n
    (at least 70% of second differences negative with mean below -0.01 per
    degree^2) wins as superexponential, otherwise the best R^2 decides.
    """
    pts = [(e.degree, e.error) for e in record.for_method(method)
           if e.flag == "ok" and e.error > 0 and e.degree >= 1]
    if len(pts) < 4:
        raise ValueError(
            f"need at least 4 pre-floor entries to classify, got {len(pts)}"
        )
    n = np.array([p[0] for p in pts], dtype=float)
    y = np.log10([p[1] for p in pts])

    slope_e, r2_e = _regress(n, y)
    slope_r, r2_r = _regress(np.sqrt(n), y)
    slope_a, r2_a = _regress(np.log10(n), y)
    diagnostics = {
        "r2_exponential": r2_e,
        "r2_root_exponential": r2_r,
        "r2_algebraic": r2_a,
    }

    # second divided differences of log10 E with respect to degree
    d2 = []
    for i in range(len(n) - 2):
        s1 = (y[i + 1] - y[i]) / (n[i + 1] - n[i])
        s2 = (y[i + 2] - y[i + 1]) / (n[i + 2] - n[i + 1])
        d2.append(2.0 * (s2 - s1) / (n[i + 2] - n[i]))
    d2 = np.array(d2)
    if d2.size and np.mean(d2 < 0) >= 0.7 and d2.mean() < -0.01:
        return RateClass("superexponential", None, diagnostics)

    best = max(
        [("exponential", r2_e, -slope_e),
         ("root-exponential", r2_r, -slope_r),
         ("algebraic", r2_a, -slope_a)],
        key=lambda t: t[1],
    )
    return RateClass(best[0], float(best[2]), diagnostics)
