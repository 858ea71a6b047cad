"""Closed-form bounds on the annulus spectral constant K(R) from the literature."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import AnnulusParams
from .errors import ConsistencyViolation

__all__ = [
    "BoundValue",
    "LOWER",
    "UPPER",
    "GAMMA_MAX_TERMS",
    "shields_upper",
    "bbc_gamma_lower",
    "bbc_upper",
    "cg_upper",
    "badea_lower",
    "shift_witness_lower",
    "bound_table",
    "check_ordering",
]

LOWER = "lower"
UPPER = "upper"
GAMMA_MAX_TERMS = 10**6
_CHUNK = 4096
LARGE_VALUE = 10.0


@dataclass(frozen=True)
class BoundValue:
    """A single bound on K(R).

    ``truncation_terms`` and ``tail_bound`` (a bound on the relative error
    from the discarded product factors) are only set for the gamma product.
    ``flags`` carries regime notes such as ``slow_convergence``,
    ``large_value`` or ``iteration_cap``.
    """

    name: str
    kind: str
    value: float
    truncation_terms: int | None = None
    tail_bound: float | None = None
    flags: tuple[str, ...] = ()


def shields_upper(a: AnnulusParams) -> BoundValue:
    R2 = a.R * a.R
    value = 2.0 + math.sqrt((R2 + 1.0) / (R2 - 1.0))
    flags = ("large_value",) if value > LARGE_VALUE else ()
    return BoundValue("shields_upper", UPPER, value, flags=flags)


def _gamma_log_factors(R: float, first: int, count: int) -> np.ndarray:
    k = np.arange(first, first + count, dtype=np.float64)
    logR = math.log(R)
    # log of ((1 - R^-8k) / (1 - R^(4-8k)))^2, each term via log1p(-exp(.))
    return 2.0 * (np.log1p(-np.exp(-8.0 * k * logR)) - np.log1p(-np.exp((4.0 - 8.0 * k) * logR)))


def bbc_gamma_lower(a: AnnulusParams, rel_tol: float = 1e-12) -> BoundValue:
    """``gamma(R) = 2 (1 - R**-2) prod_{k>=1} ((1 - R**-8k) / (1 - R**(4-8k)))**2``.

    Factors are appended until one differs from 1 by less than
    ``rel_tol / 10``. The discarded tail is bounded through
    ``log factor_k <= 2 x_k / (1 - x_k)`` with ``x_k = R**(4-8k)``, which
    decays geometrically with ratio ``R**-8``.
    """
    if not rel_tol > 0:
        raise ValueError("rel_tol must be positive")
    R = a.R
    logR = math.log(R)
    stop = rel_tol / 10.0
    logs: list[float] = []
    terms = None
    first = 1
    while first <= GAMMA_MAX_TERMS:
        count = min(_CHUNK, GAMMA_MAX_TERMS - first + 1)
        chunk = _gamma_log_factors(R, first, count)
        done = np.flatnonzero(np.abs(np.expm1(chunk)) < stop)
        if done.size:
            logs.extend(chunk[: done[0] + 1].tolist())
            terms = first + int(done[0])
            break
        logs.extend(chunk.tolist())
        first += count

    flags: list[str] = []
    if terms is None:
        terms = GAMMA_MAX_TERMS
        flags.append("iteration_cap")
    if terms > 1000:
        flags.append("slow_convergence")

    x_next = math.exp((4.0 - 8.0 * (terms + 1)) * logR)
    tail_log = 2.0 * x_next / ((1.0 - x_next) * -math.expm1(-8.0 * logR))
    value = 2.0 * -math.expm1(-2.0 * logR) * math.exp(math.fsum(logs))
    return BoundValue(
        "bbc_gamma_lower", LOWER, value,
        truncation_terms=terms, tail_bound=math.expm1(tail_log), flags=tuple(flags),
    )


def bbc_upper(a: AnnulusParams) -> BoundValue:
    R = a.R
    return BoundValue("bbc_upper", UPPER, 2.0 + (R + 1.0) / math.sqrt(R * R + R + 1.0))


def cg_upper() -> BoundValue:
    return BoundValue("cg_upper", UPPER, 1.0 + math.sqrt(2.0))


def badea_lower(a: AnnulusParams) -> BoundValue:
    R = a.R
    return BoundValue("badea_lower", LOWER, 2.0 * (1.0 + R * R + R) / (1.0 + R * R + 2.0 * R))


def shift_witness_lower() -> BoundValue:
    """The universal lower bound 2, the supremum of the witness ratios."""
    return BoundValue("shift_witness_lower", LOWER, 2.0)


def check_ordering(bounds: list[BoundValue]) -> bool:
    lowers = [b.value for b in bounds if b.kind == LOWER]
    uppers = [b.value for b in bounds if b.kind == UPPER]
    return not lowers or not uppers or max(lowers) <= min(uppers)


def bound_table(a: AnnulusParams, gamma_tol: float = 1e-12) -> list[BoundValue]:
    """All six bounds at ``R``, sorted by name.

    Raises :class:`ConsistencyViolation` if some lower bound exceeds some
    upper bound.
    """
    table = sorted(
        [
            badea_lower(a),
            bbc_gamma_lower(a, gamma_tol),
            bbc_upper(a),
            cg_upper(),
            shields_upper(a),
            shift_witness_lower(),
        ],
        key=lambda b: b.name,
    )
    if not check_ordering(table):
        raise ConsistencyViolation(f"lower bound exceeds upper bound at R={a.R!r}: {table}")
    return table
