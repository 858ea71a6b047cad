"""Truncated bilateral shift (multiplication by ``z``) on the weighted space.

In orthonormal coordinates the shift sends basis index ``k`` to ``k + 1``
with factor ``beta(k+1) / beta(k)``, which is always ``R`` or ``1/R``.
Powers are applied in one pass with the telescoping factor
``beta(k+j) / beta(k)``. Nothing is ever silently truncated: moving a
nonzero component past the window edge raises :class:`WindowOverflow`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import CoeffVector, TruncationWindow, WeightSequence
from .errors import InvariantViolation, WindowOverflow

__all__ = [
    "ShiftOperator",
    "apply_power",
    "apply_power_adjoint",
    "shift_norm",
    "inverse_shift_norm",
    "canonical_window",
    "step_matrix",
]


@dataclass(frozen=True)
class ShiftOperator:
    weights: WeightSequence
    window: TruncationWindow

    @property
    def R(self) -> float:
        return self.weights.R

    def beta_values(self) -> np.ndarray:
        return self.weights.values(self.window.lo, self.window.hi)

    def step_exponents(self) -> np.ndarray:
        """Exponent change of ``beta`` across each step ``k -> k+1``; always +1 or -1."""
        e = self.weights.exponent(self.window.indices())
        steps = np.diff(e)
        if not np.all(np.abs(steps) == 1):
            raise InvariantViolation("weight exponents must change by exactly one per step")
        return steps

    def step_weights(self) -> np.ndarray:
        """``w_k = beta(k+1)/beta(k)`` for ``k = lo..hi-1``, exactly ``R`` or ``1/R``."""
        return np.where(self.step_exponents() > 0, self.R, 1.0 / self.R)


def canonical_window(n: int, m: int) -> TruncationWindow:
    """Smallest window holding the witness and its images under ``S**±n``."""
    return TruncationWindow(-n, (2 * m * m + 1) * n)


def _check_window(op: ShiftOperator, v: CoeffVector):
    if v.window != op.window:
        raise ValueError(
            f"vector window [{v.window.lo}, {v.window.hi}] does not match operator "
            f"window [{op.window.lo}, {op.window.hi}]"
        )


def _overflow_check(values: np.ndarray, j: int, window: TruncationWindow):
    # entries that would land outside the window after moving by j
    lost = values[len(values) - j:] if j > 0 else values[:-j]
    if np.any(lost != 0.0):
        bad = np.flatnonzero(lost)[0]
        k = window.lo + (len(values) - j + bad if j > 0 else bad)
        raise WindowOverflow(
            f"S^{j} moves nonzero index {k} outside window [{window.lo}, {window.hi}]"
        )


def apply_power(op: ShiftOperator, v: CoeffVector, j: int) -> CoeffVector:
    """``S**j v``; the component at ``k + j`` is ``v[k] * beta(k+j) / beta(k)``."""
    _check_window(op, v)
    j = int(j)
    if j == 0:
        return v
    x = v.values
    size = len(x)
    if abs(j) >= size:
        if np.any(x != 0.0):
            raise WindowOverflow(f"S^{j} moves all mass outside a window of length {size}")
        return v
    _overflow_check(x, j, op.window)
    b = op.beta_values()
    out = np.zeros(size)
    if j > 0:
        out[j:] = x[:-j] * (b[j:] / b[:-j])
    else:
        out[:j] = x[-j:] * (b[:j] / b[-j:])
    return CoeffVector(op.window, out)


def apply_power_adjoint(op: ShiftOperator, y: CoeffVector, j: int) -> CoeffVector:
    """Adjoint of ``S**j`` in orthonormal coordinates.

    The result at index ``k`` is ``y[k+j] * beta(k+j) / beta(k)``: the same
    factors as ``S**j`` with the direction reversed. Strict like
    :func:`apply_power`.
    """
    _check_window(op, y)
    j = int(j)
    if j == 0:
        return y
    x = y.values
    size = len(x)
    if abs(j) >= size:
        if np.any(x != 0.0):
            raise WindowOverflow(f"adjoint of S^{j} moves all mass outside the window")
        return y
    _overflow_check(x, -j, op.window)
    b = op.beta_values()
    out = np.zeros(size)
    if j > 0:
        out[:-j] = x[j:] * (b[j:] / b[:-j])
    else:
        out[-j:] = x[:j] * (b[:j] / b[-j:])
    return CoeffVector(op.window, out)


def _require_full_period(op: ShiftOperator):
    if len(op.window) - 1 < op.weights.period:
        raise ValueError(
            f"window [{op.window.lo}, {op.window.hi}] spans fewer than one period "
            f"({op.weights.period} steps); the supremum may not be attained"
        )


def shift_norm(op: ShiftOperator) -> float:
    """``sup beta(k+1)/beta(k)`` over the window; equals ``R``.

    Step weights are taken from the exponent pattern of ``beta``, which
    keeps them exactly two-valued.
    """
    _require_full_period(op)
    return float(op.step_weights().max())


def inverse_shift_norm(op: ShiftOperator) -> float:
    """``sup beta(k)/beta(k+1)`` over the window; equals ``R``."""
    _require_full_period(op)
    return float(np.where(op.step_exponents() < 0, op.R, 1.0 / op.R).max())


def step_matrix(op: ShiftOperator, inverse: bool = False) -> np.ndarray:
    """Dense matrix of one step of ``S`` (or ``S**-1``) compressed to the window.

    Built entry by entry from scalar weight evaluations; intended for small
    windows and cross-checks.
    """
    lo, size = op.window.lo, len(op.window)
    w = op.weights
    mat = np.zeros((size, size))
    for i in range(size):
        k = lo + i
        if not inverse and i + 1 < size:
            mat[i + 1, i] = w(k + 1) / w(k)
        elif inverse and i >= 1:
            mat[i - 1, i] = w(k - 1) / w(k)
    return mat
