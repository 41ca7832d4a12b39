"""Polynomial least-squares fitting on arbitrary point sets.

Builds a discretely orthonormal polynomial basis by an Arnoldi recurrence
with the diagonal matrix of sample points, sidestepping the
ill-conditioning of raw Vandermonde matrices.  Evaluation at new points
re-runs the stored recurrence.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .geometry import SampleSet


class ArnoldiBreakdownError(RuntimeError):
    """Basis generation broke down (fewer distinct points than degree + 1)."""

    def __init__(self, step):
        self.step = step
        super().__init__(
            f"Arnoldi breakdown at column {step}: subdiagonal entry below 1e-14"
        )


@dataclass(frozen=True)
class ArnoldiPolynomial:
    """Degree-n polynomial stored as recurrence coefficients plus a
    coefficient vector in the induced orthonormal basis."""

    hessenberg: np.ndarray      # (n+1) x n, positive real subdiagonal
    coeffs: np.ndarray          # n+1
    degree: int
    normalization_points: int   # sample count M used at fit time

    def __call__(self, z):
        return va_eval(self, z)


def va_fit(samples, degree):
    """Least-squares polynomial fit of SampleSet data at the given degree."""
    if not isinstance(samples, SampleSet):
        samples = SampleSet(*samples)
    Z, F = samples.points, samples.values
    M = Z.size
    n = int(degree)
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if M < n + 1:
        raise ValueError(f"need at least degree + 1 = {n + 1} samples, got {M}")
    Q = np.zeros((M, n + 1), dtype=complex)
    H = np.zeros((n + 1, n), dtype=complex)
    Q[:, 0] = 1.0
    root_m = np.sqrt(M)
    for k in range(n):
        q = Z * Q[:, k]
        # modified Gram-Schmidt plus one reorthogonalization sweep
        for _ in range(2):
            h = Q[:, : k + 1].conj().T @ q / M
            q = q - Q[:, : k + 1] @ h
            H[: k + 1, k] += h
        sub = np.linalg.norm(q) / root_m
        if sub < 1e-14:
            raise ArnoldiBreakdownError(k + 1)
        H[k + 1, k] = sub
        Q[:, k + 1] = q / sub
    c = linalg.solve_least_squares(Q, F)
    return ArnoldiPolynomial(
        hessenberg=H, coeffs=c, degree=n, normalization_points=M
    )


def va_eval(model, points):
    """Evaluate the polynomial by regenerating the basis at new points."""
    zv = np.asarray(points, dtype=complex)
    scalar = zv.ndim == 0
    zv = np.atleast_1d(zv).ravel()
    n = model.degree
    W = np.zeros((zv.size, n + 1), dtype=complex)
    W[:, 0] = 1.0
    H = model.hessenberg
    for k in range(n):
        w = zv * W[:, k] - W[:, : k + 1] @ H[: k + 1, k]
        W[:, k + 1] = w / H[k + 1, k]
    out = W @ model.coeffs
    if scalar:
        return complex(out[0])
    return out.reshape(np.shape(points))
