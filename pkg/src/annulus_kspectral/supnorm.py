"""Sup norm of a Laurent polynomial over the closed annulus.

A Laurent polynomial is holomorphic on the open annulus and continuous up to
its boundary, so its modulus peaks on ``|z| = R`` or ``|z| = 1/R``. Only the
two boundary circles are sampled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import AnnulusParams, LaurentPolynomial, int_power

__all__ = ["SupNormResult", "sup_norm_sampled", "gn_sup_norm_closed", "circle_values"]


@dataclass(frozen=True)
class SupNormResult:
    value: float
    argmax_radius: float
    argmax_angle: float
    samples_per_circle: int


def _angles(samples: int) -> np.ndarray:
    # (2*pi*k)/N so that a doubled grid reproduces these angles bit for bit
    return (2.0 * math.pi * np.arange(samples)) / samples


def circle_values(p: LaurentPolynomial, radius: float, samples: int) -> np.ndarray:
    """``|p(radius * exp(i*theta))|`` on the equispaced grid starting at 0."""
    theta = _angles(samples)
    acc = np.zeros(samples, dtype=complex)
    for deg, c in p.items():
        acc += (c * radius**deg) * np.exp(1j * (deg * theta))
    return np.abs(acc)


def sup_norm_sampled(p: LaurentPolynomial, a: AnnulusParams, samples: int = 4096) -> SupNormResult:
    """Largest sampled ``|p|`` over both boundary circles.

    The result is a lower bound on the true sup norm and converges to it as
    the grid is refined. Ties go to the outer circle, then the smaller angle.
    """
    if int(samples) != samples or samples < 16 or samples % 2:
        raise ValueError(f"samples must be an even integer >= 16 (got {samples!r})")
    samples = int(samples)
    best = (-1.0, a.R, 0.0)
    theta = _angles(samples)
    for radius in (a.R, 1.0 / a.R):
        vals = circle_values(p, radius, samples)
        i = int(np.argmax(vals))
        if vals[i] > best[0]:
            best = (float(vals[i]), radius, float(theta[i]))
    return SupNormResult(best[0], best[1], best[2], samples)


def gn_sup_norm_closed(n: int, a: AnnulusParams) -> float:
    """Sup norm of ``R**-n (z**-n + z**n)`` over the annulus: ``1 + R**(-2n)``."""
    if int(n) != n or n < 2:
        raise ValueError(f"n must be >= 2 (got {n!r})")
    c = 1.0 / int_power(a.R, int(n))
    return 1.0 + c * c
