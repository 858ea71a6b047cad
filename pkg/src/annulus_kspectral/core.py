"""Shared domain types: annulus parameters, Laurent polynomials, weights, windows.

Vectors are stored in orthonormal coordinates: the component at index ``k``
is ``fhat(k) * beta(k)``, so the weighted norm of ``f`` is the plain
Euclidean norm of the stored array.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

import numpy as np

__all__ = [
    "AnnulusParams",
    "LaurentPolynomial",
    "WeightSequence",
    "TruncationWindow",
    "CoeffVector",
    "beta",
    "make_gn",
    "int_power",
]


def int_power(x: float, q: int) -> float:
    """``x**q`` for integer ``q >= 0`` by repeated squaring.

    Raises OverflowError instead of returning ``inf``.
    """
    if q < 0:
        raise ValueError("exponent must be non-negative")
    result = 1.0
    base = float(x)
    while q:
        if q & 1:
            result *= base
        q >>= 1
        if q:
            base *= base
        if not (math.isfinite(result) and math.isfinite(base)):
            raise OverflowError(f"{x}**q overflows double precision")
    return result


@dataclass(frozen=True)
class AnnulusParams:
    """The annulus ``{1/R <= |z| <= R}``."""

    R: float

    def __post_init__(self):
        R = float(self.R)
        if not math.isfinite(R) or not R > 1.0:
            raise ValueError(f"R must exceed 1 (got {self.R!r})")
        object.__setattr__(self, "R", R)


class LaurentPolynomial:
    """Finitely supported Laurent polynomial with real coefficients.

    Zero coefficients are dropped on construction; the empty map is the zero
    polynomial.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, float] | Iterable[tuple[int, float]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, float] = {}
        for deg, c in items:
            if int(deg) != deg:
                raise ValueError(f"degree must be an integer (got {deg!r})")
            c = float(c)
            if not math.isfinite(c):
                raise ValueError(f"coefficient at degree {deg} is not finite")
            acc[int(deg)] = acc.get(int(deg), 0.0) + c
        self._coeffs = tuple(sorted((d, c) for d, c in acc.items() if c != 0.0))

    @classmethod
    def constant(cls, c: float) -> "LaurentPolynomial":
        return cls({0: c})

    @property
    def coeffs(self) -> dict[int, float]:
        return dict(self._coeffs)

    def items(self) -> tuple[tuple[int, float], ...]:
        """(degree, coefficient) pairs in ascending degree order."""
        return self._coeffs

    def __getitem__(self, deg: int) -> float:
        return dict(self._coeffs).get(deg, 0.0)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def min_degree(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no degree")
        return self._coeffs[0][0]

    @property
    def max_degree(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no degree")
        return self._coeffs[-1][0]

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.zeros_like(z)
        for deg, c in self._coeffs:
            out = out + c * z**deg
        return out

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return LaurentPolynomial(self._coeffs + other._coeffs)

    def __mul__(self, c: float) -> "LaurentPolynomial":
        if isinstance(c, LaurentPolynomial):
            return NotImplemented
        return LaurentPolynomial({d: c * v for d, v in self._coeffs})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"LaurentPolynomial({dict(self._coeffs)!r})"


@dataclass(frozen=True)
class WeightSequence:
    """Weights ``beta(k)`` with half-period ``n``.

    ``beta(2ln + q) = R**q`` and ``beta((2l+1)n + q) = R**(n-q)`` for
    ``q in {0..n}``, which reduces to ``R**min(r, 2n - r)`` with
    ``r = k mod 2n``.
    """

    n: int
    R: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"n must be a positive integer (got {self.n!r})")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "R", AnnulusParams(self.R).R)
        self._powers  # overflow surfaces at construction

    @cached_property
    def _powers(self) -> np.ndarray:
        powers = np.array([int_power(self.R, q) for q in range(self.n + 1)])
        powers.setflags(write=False)
        return powers

    @property
    def period(self) -> int:
        return 2 * self.n

    def exponent(self, k):
        r = np.mod(k, 2 * self.n)
        return np.minimum(r, 2 * self.n - r)

    def __call__(self, k: int) -> float:
        return float(self._powers[int(self.exponent(int(k)))])

    def values(self, lo: int, hi: int) -> np.ndarray:
        """``beta(k)`` for ``k = lo..hi`` inclusive."""
        return self._powers[self.exponent(np.arange(lo, hi + 1, dtype=np.int64))]


def beta(k: int, w: WeightSequence) -> float:
    return w(k)


def make_gn(n: int, a: AnnulusParams) -> LaurentPolynomial:
    """``R**-n * (z**-n + z**n)``, defined for ``n >= 2``."""
    if int(n) != n or n < 2:
        raise ValueError(f"n must be >= 2 (got {n!r})")
    n = int(n)
    c = 1.0 / int_power(a.R, n)
    return LaurentPolynomial({-n: c, n: c})


@dataclass(frozen=True)
class TruncationWindow:
    """Inclusive index range ``[lo, hi]``."""

    lo: int
    hi: int

    def __post_init__(self):
        if int(self.lo) != self.lo or int(self.hi) != self.hi:
            raise ValueError("window bounds must be integers")
        object.__setattr__(self, "lo", int(self.lo))
        object.__setattr__(self, "hi", int(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty window [{self.lo}, {self.hi}]")

    def __len__(self):
        return self.hi - self.lo + 1

    def __contains__(self, k):
        return self.lo <= k <= self.hi

    def indices(self) -> np.ndarray:
        return np.arange(self.lo, self.hi + 1, dtype=np.int64)


@dataclass(frozen=True, eq=False)
class CoeffVector:
    """An element of the weighted space restricted to a window.

    ``values[i]`` is the orthonormal coordinate at index ``window.lo + i``.
    """

    window: TruncationWindow
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        values = np.array(self.values, dtype=np.float64)
        if values.shape != (len(self.window),):
            raise ValueError(
                f"expected {len(self.window)} values for window "
                f"[{self.window.lo}, {self.window.hi}], got shape {values.shape}"
            )
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def zeros(cls, window: TruncationWindow) -> "CoeffVector":
        return cls(window, np.zeros(len(window)))

    @classmethod
    def unit(cls, window: TruncationWindow, k: int) -> "CoeffVector":
        if k not in window:
            raise ValueError(f"index {k} outside window")
        values = np.zeros(len(window))
        values[k - window.lo] = 1.0
        return cls(window, values)

    @classmethod
    def from_coefficients(cls, window, weights: WeightSequence, fhat) -> "CoeffVector":
        """Build from raw Laurent coefficients ``fhat(k)``, ``k`` in the window."""
        return cls(window, np.asarray(fhat, dtype=np.float64) * weights.values(window.lo, window.hi))

    def coefficients(self, weights: WeightSequence) -> np.ndarray:
        """Raw Laurent coefficients ``fhat(k)`` over the window."""
        return self.values / weights.values(self.window.lo, self.window.hi)

    def __getitem__(self, k: int) -> float:
        if k not in self.window:
            return 0.0
        return float(self.values[k - self.window.lo])

    def support(self) -> np.ndarray:
        return self.window.lo + np.flatnonzero(self.values)

    def norm(self) -> float:
        """Euclidean norm, i.e. the weighted norm of the represented element.

        The sum of squares is accumulated exactly, so the result stays within
        a couple of ulps regardless of window length.
        """
        return math.sqrt(math.fsum((self.values * self.values).tolist()))

    def _check(self, other):
        if not isinstance(other, CoeffVector):
            return False
        if other.window != self.window:
            raise ValueError("vectors live on different windows")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        return CoeffVector(self.window, self.values + other.values)

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return CoeffVector(self.window, self.values - other.values)

    def __mul__(self, c):
        return CoeffVector(self.window, float(c) * self.values)

    __rmul__ = __mul__
