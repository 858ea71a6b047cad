"""Witness-vector lower bounds for the annulus spectral constant.

For ``n >= 2`` and ``m >= 3`` the witness ``h`` has raw coefficient ``1/m``
at indices ``2ln`` for ``l = 0..m**2`` and zero elsewhere. The ratio

    |g_n(S) h| / (|g_n|_annulus * |h|)

is a rigorous lower bound for the spectral constant, because the shift
satisfies ``|S| = |S**-1| = R``. It approaches ``2 / (1 + R**(-2n))`` as
``m`` grows, and 2 as ``n`` grows as well.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .core import AnnulusParams, CoeffVector, TruncationWindow, WeightSequence, int_power
from .errors import InvariantViolation, WindowOverflow, WindowTooLarge
from .shift import ShiftOperator, apply_power, canonical_window
from .supnorm import gn_sup_norm_closed

__all__ = [
    "CertificateParams",
    "CertificateResult",
    "MAX_WINDOW",
    "DEFAULT_R_VALUES",
    "DEFAULT_N_VALUES",
    "DEFAULT_M_VALUES",
    "make_witness",
    "witness_operator",
    "evaluate_certificate",
    "closed_form_ratio",
    "paper_chain_value",
    "sweep",
    "best_ratio",
]

MAX_WINDOW = 10**7
DEFAULT_R_VALUES = (1.1, 1.25, 1.5, 2.0, 3.0, 5.0, 10.0)
DEFAULT_N_VALUES = tuple(range(2, 13))
DEFAULT_M_VALUES = (3, 10, 31, 100)

CEILING = 1.0 + math.sqrt(2.0)


@dataclass(frozen=True)
class CertificateParams:
    n: int
    m: int
    a: AnnulusParams

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 2:
            raise ValueError(f"n must be >= 2 (got {self.n!r})")
        if int(self.m) != self.m or self.m < 3:
            raise ValueError(f"m must be >= 3 (got {self.m!r})")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "m", int(self.m))
        if not isinstance(self.a, AnnulusParams):
            object.__setattr__(self, "a", AnnulusParams(self.a))

    @property
    def R(self) -> float:
        return self.a.R


@dataclass(frozen=True)
class CertificateResult:
    """One evaluated witness ratio.

    Numeric fields are NaN and ``error`` is set when the cell failed inside
    :func:`sweep`.
    """

    params: CertificateParams
    h_norm: float
    image_norm: float
    ratio: float
    closed_form: float
    paper_chain_value: float
    window: TruncationWindow
    error: str = ""

    @property
    def ok(self) -> bool:
        return not self.error


def gn_closed_ratio(m: int) -> float:
    """``|(S**-n + S**n) h| / (R**n |h|)``, which depends on ``m`` only."""
    return m * math.sqrt(4.0 + 2.0 / (m * m)) / math.sqrt(m * m + 1.0)


def closed_form_ratio(n: int, m: int, R: float) -> float:
    """``m sqrt(4 + 2/m**2) / (sqrt(m**2 + 1) (1 + R**(-2n)))``."""
    return gn_closed_ratio(m) / gn_sup_norm_closed(n, AnnulusParams(R))


def paper_chain_value(n: int, m: int, R: float) -> float:
    """The weaker chained bound ``2 R**n m / ((R**n + R**-n) sqrt(m**2 + 1))``."""
    rn = int_power(R, n)
    return 2.0 * rn * m / ((rn + 1.0 / rn) * math.sqrt(m * m + 1.0))


def witness_operator(params: CertificateParams, max_window: int = MAX_WINDOW) -> ShiftOperator:
    window = canonical_window(params.n, params.m)
    if len(window) > max_window:
        raise WindowTooLarge(
            f"window length {len(window)} for n={params.n}, m={params.m} exceeds cap {max_window}"
        )
    return ShiftOperator(WeightSequence(params.n, params.R), window)


def make_witness(params: CertificateParams, max_window: int = MAX_WINDOW) -> CoeffVector:
    """The witness ``h`` on the canonical window, in orthonormal coordinates."""
    op = witness_operator(params, max_window)
    n, m = params.n, params.m
    window = op.window
    fhat = np.zeros(len(window))
    fhat[2 * n * np.arange(m * m + 1) - window.lo] = 1.0 / m
    return CoeffVector.from_coefficients(window, op.weights, fhat)


def _violation(what: str, params: CertificateParams, got: float, want: float):
    raise InvariantViolation(
        f"{what} check failed for n={params.n}, m={params.m}, R={params.R!r}: "
        f"computed {got!r}, expected {want!r}"
    )


def evaluate_certificate(params: CertificateParams, max_window: int = MAX_WINDOW) -> CertificateResult:
    """Build ``h``, apply ``S**-n + S**n`` on the window, and form the ratio.

    Every identity the construction guarantees is re-checked and a failure
    raises :class:`InvariantViolation`.
    """
    n, m, R = params.n, params.m, params.R
    op = witness_operator(params, max_window)
    h = make_witness(params, max_window)

    h_norm = h.norm()
    expected_h = math.sqrt(m * m + 1.0) / m
    if abs(h_norm - expected_h) > 1e-12:
        _violation("witness norm", params, h_norm, expected_h)

    image = apply_power(op, h, -n) + apply_power(op, h, n)
    image_norm = image.norm()
    rn = int_power(R, n)
    expected_image = rn * math.sqrt(4.0 + 2.0 / (m * m))
    if abs(image_norm - expected_image) > 1e-10 * expected_image:
        _violation("image norm", params, image_norm, expected_image)
    if not image_norm > 2.0 * rn:
        _violation("image lower bound", params, image_norm, 2.0 * rn)

    gn_norm = gn_sup_norm_closed(n, params.a)
    ratio = image_norm / (rn * gn_norm * h_norm)
    closed = gn_closed_ratio(m) / gn_norm
    chain = paper_chain_value(n, m, R)
    if abs(ratio - closed) > 1e-10 * closed:
        _violation("closed form", params, ratio, closed)
    if ratio < chain - 1e-12:
        _violation("chain dominance", params, ratio, chain)
    if not ratio < 2.0 or ratio > CEILING + 1e-9:
        _violation("ceiling", params, ratio, 2.0)

    return CertificateResult(params, h_norm, image_norm, ratio, closed, chain, op.window)


def _failed(params: CertificateParams, exc: Exception) -> CertificateResult:
    nan = float("nan")
    return CertificateResult(
        params, nan, nan, nan, nan, nan,
        canonical_window(params.n, params.m),
        error=f"{type(exc).__name__}: {exc}",
    )


def sweep(
    n_values: Iterable[int] = DEFAULT_N_VALUES,
    m_values: Iterable[int] = DEFAULT_M_VALUES,
    R_values: Iterable[float] = DEFAULT_R_VALUES,
    max_window: int = MAX_WINDOW,
) -> list[CertificateResult]:
    """Evaluate every ``(R, n, m)`` combination in lexicographic order.

    Parameters are validated up front. Failures inside a cell (an oversized
    window, say) are recorded on that row and the sweep moves on.
    """
    Rs = sorted({AnnulusParams(R).R for R in R_values})
    ns = sorted({int(n) for n in n_values})
    ms = sorted({int(m) for m in m_values})
    if not (Rs and ns and ms):
        raise ValueError("sweep needs at least one value of each of R, n and m")
    cells = [CertificateParams(n, m, AnnulusParams(R)) for R, n, m in itertools.product(Rs, ns, ms)]
    results = []
    for params in cells:
        try:
            results.append(evaluate_certificate(params, max_window))
        except (WindowTooLarge, WindowOverflow, InvariantViolation, OverflowError, MemoryError) as exc:
            results.append(_failed(params, exc))
    return results


def best_ratio(results: Iterable[CertificateResult]) -> CertificateResult:
    """The successful row with the largest ratio (first one on ties)."""
    best = None
    for r in results:
        if r.ok and (best is None or r.ratio > best.ratio):
            best = r
    if best is None:
        raise ValueError("no successful certificate rows")
    return best
