"""Laurent polynomials of the shift, and windowed operator-norm estimates."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import CoeffVector, LaurentPolynomial
from .errors import NonConvergenceWarning
from .shift import ShiftOperator, apply_power, apply_power_adjoint

__all__ = [
    "NormEstimate",
    "apply_laurent",
    "apply_laurent_adjoint",
    "strict_domain",
    "operator_norm",
    "DEFAULT_SEED",
]

DEFAULT_SEED = 20240229


@dataclass(frozen=True)
class NormEstimate:
    """Result of :func:`operator_norm`.

    ``certified_lower`` is the largest ratio ``|p(S)x| / |x|`` seen over
    every probe and iterate. Each such ratio is exact for the bilateral
    operator because ``x`` is supported where no mass leaves the window, so
    it is a rigorous lower bound on ``|p(S)|``. ``estimate`` is the
    power-iteration value at termination.
    """

    certified_lower: float
    estimate: float
    iterations: int
    residual: float
    converged: bool
    seed: int


def apply_laurent(p: LaurentPolynomial, op: ShiftOperator, v: CoeffVector) -> CoeffVector:
    """``p(S) v``, summed in ascending degree order."""
    if v.window != op.window:
        raise ValueError("vector window does not match operator window")
    out = np.zeros(len(op.window))
    for deg, c in p.items():
        out += c * apply_power(op, v, deg).values
    return CoeffVector(op.window, out)


def apply_laurent_adjoint(p: LaurentPolynomial, op: ShiftOperator, y: CoeffVector) -> CoeffVector:
    """``p(S)* y`` (strict), summed in ascending degree order."""
    out = np.zeros(len(op.window))
    for deg, c in p.items():
        out += c * apply_power_adjoint(op, y, deg).values
    return CoeffVector(op.window, out)


def strict_domain(p: LaurentPolynomial, op: ShiftOperator) -> tuple[int, int]:
    """Index range whose vectors ``p(S)`` keeps inside the window.

    Returned as offsets ``(start, stop)`` into the window array.
    """
    size = len(op.window)
    if p.is_zero:
        return 0, size
    start = max(0, -p.min_degree)
    stop = min(size, size - p.max_degree)
    if start >= stop:
        raise ValueError(
            f"window of length {size} cannot hold the degree range "
            f"[{p.min_degree}, {p.max_degree}]"
        )
    return start, stop


def _forward(p, b, x, start, stop):
    # p(S) applied to x supported on [start, stop); output on the full window
    y = np.zeros(len(b))
    for deg, c in p.items():
        y[start + deg:stop + deg] += c * x * (b[start + deg:stop + deg] / b[start:stop])
    return y


def _backward(p, b, y, start, stop):
    # adjoint of the map above: gather back onto [start, stop)
    z = np.zeros(stop - start)
    for deg, c in p.items():
        z += c * y[start + deg:stop + deg] * (b[start + deg:stop + deg] / b[start:stop])
    return z


def operator_norm(
    p: LaurentPolynomial,
    op: ShiftOperator,
    tol: float = 1e-10,
    max_iter: int = 10000,
    probes: Sequence[CoeffVector] = (),
    seed: int = DEFAULT_SEED,
) -> NormEstimate:
    """Estimate ``|p(S)|`` by power iteration on ``p(S)* p(S)``.

    Iterates live on the largest index range that ``p(S)`` maps into the
    window, so every Rayleigh quotient is exact. Each probe is scored
    directly, then used in turn as a start vector, followed by one
    pseudo-random start drawn from ``seed``. If an iterate is annihilated
    the next start is tried. Never raises on non-convergence; the result is
    flagged and a :class:`NonConvergenceWarning` is emitted instead.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")
    start, stop = strict_domain(p, op)
    b = op.beta_values()

    certified = 0.0
    starts = []
    for probe in probes:
        norm = probe.norm()
        if norm == 0.0:
            raise ValueError("probes must be nonzero")
        certified = max(certified, apply_laurent(p, op, probe).norm() / norm)
        starts.append(probe.values[start:stop])
    rng = np.random.default_rng(seed)
    starts.append(rng.standard_normal(stop - start))

    iterations = 0
    for x in starts:
        nx = np.linalg.norm(x)
        if nx == 0.0:
            continue
        x = x / nx
        y = _forward(p, b, x, start, stop)
        sigma = float(np.linalg.norm(y))
        if sigma == 0.0:
            continue
        certified = max(certified, sigma)
        residual = np.inf
        for _ in range(max_iter):
            iterations += 1
            z = _backward(p, b, y, start, stop)
            nz = np.linalg.norm(z)
            if nz == 0.0:
                break
            x = z / nz
            y = _forward(p, b, x, start, stop)
            new = float(np.linalg.norm(y))
            certified = max(certified, new)
            residual = abs(new - sigma) / new
            sigma = new
            if residual < tol:
                return NormEstimate(certified, sigma, iterations, residual, True, seed)
        else:
            warnings.warn(
                f"power iteration did not reach tol={tol} in {max_iter} iterations",
                NonConvergenceWarning,
                stacklevel=2,
            )
            return NormEstimate(certified, sigma, iterations, residual, False, seed)

    warnings.warn("every start vector was annihilated", NonConvergenceWarning, stacklevel=2)
    return NormEstimate(certified, certified, iterations, np.inf, False, seed)
