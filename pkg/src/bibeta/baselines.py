"""Classical bivariate beta constructions used for comparison.

Two gamma-ratio families with a shared denominator component (one with
free rates, one reduced to three parameters), plus the five-gamma
construction whose density has no closed form and is provided as a
sampler only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .construction import RandomStream
from .errors import DomainError
from .special import ln_beta_multi

__all__ = [
    "LibbyNovickParams",
    "ArnoldParams",
    "sample_libby_novick",
    "pdf_libby_novick",
    "pdf_three_param",
    "sample_arnold",
]

_LO = float(np.nextafter(0.0, 1.0))
_HI = float(np.nextafter(1.0, 0.0))


def _check_positive(name, value):
    if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0.0):
        raise DomainError(f"{name} must be finite and > 0, got {value!r}")


@dataclass(frozen=True)
class LibbyNovickParams:
    """Shapes a0, a1, a2 and rates b0, b1, b2 of the three source gammas.

    The shared gamma (index 0) sits in both denominators; only the rate
    ratios lambda1 = b1/b0 and lambda2 = b2/b0 enter the density.
    """

    a0: float
    a1: float
    a2: float
    b0: float = 1.0
    b1: float = 1.0
    b2: float = 1.0

    def __post_init__(self):
        for name in ("a0", "a1", "a2", "b0", "b1", "b2"):
            _check_positive(name, getattr(self, name))

    @property
    def lambda1(self) -> float:
        return self.b1 / self.b0

    @property
    def lambda2(self) -> float:
        return self.b2 / self.b0


@dataclass(frozen=True)
class ArnoldParams:
    """Shapes of the five unit-scale source gammas."""

    a1: float
    a2: float
    a3: float
    a4: float
    a5: float

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a5"):
            _check_positive(name, getattr(self, name))


def _check_n(n):
    if not (isinstance(n, int) and not isinstance(n, bool) and n >= 1):
        raise DomainError(f"n must be an integer >= 1, got {n!r}")


def _check_point(x, y):
    for name, v in (("x", x), ("y", y)):
        if not (isinstance(v, (int, float)) and math.isfinite(v)):
            raise DomainError(f"{name} must be finite, got {v!r}")
    if not (0.0 < x < 1.0 and 0.0 < y < 1.0):
        raise DomainError(f"point ({x}, {y}) is outside the open unit square")


def sample_libby_novick(p: LibbyNovickParams, n: int, stream: RandomStream) -> np.ndarray:
    """Draw n pairs as ratios G1/(G1+G0), G2/(G2+G0)."""
    _check_n(n)
    gen = stream.generator
    out = np.empty((n, 2))
    todo = np.arange(n)
    for _ in range(8):
        k = todo.size
        g0 = gen.standard_gamma(p.a0, size=k) / p.b0
        g1 = gen.standard_gamma(p.a1, size=k) / p.b1
        g2 = gen.standard_gamma(p.a2, size=k) / p.b2
        with np.errstate(invalid="ignore", divide="ignore"):
            x = g1 / (g1 + g0)
            y = g2 / (g2 + g0)
        out[todo, 0] = x
        out[todo, 1] = y
        todo = todo[~(np.isfinite(x) & np.isfinite(y))]
        if todo.size == 0:
            break
    else:
        raise DomainError("sampler kept producing degenerate gamma draws")
    return np.clip(out, _LO, _HI)


def pdf_libby_novick(p: LibbyNovickParams, x: float, y: float) -> float:
    """Density of the shared-denominator gamma-ratio pair at (x, y)."""
    _check_point(x, y)
    l1, l2 = p.lambda1, p.lambda2
    s = p.a0 + p.a1 + p.a2
    ln_f = (-ln_beta_multi((p.a0, p.a1, p.a2))
            + p.a1 * math.log(l1) + (p.a1 - 1.0) * math.log(x) - (p.a1 + 1.0) * math.log1p(-x)
            + p.a2 * math.log(l2) + (p.a2 - 1.0) * math.log(y) - (p.a2 + 1.0) * math.log1p(-y)
            - s * math.log1p(l1 * x / (1.0 - x) + l2 * y / (1.0 - y)))
    return math.exp(ln_f)


def pdf_three_param(a0: float, a1: float, a2: float, x: float, y: float) -> float:
    """Density of the equal-rates reduction, with denominator (1-xy)^(a0+a1+a2)."""
    for name, v in (("a0", a0), ("a1", a1), ("a2", a2)):
        _check_positive(name, v)
    _check_point(x, y)
    s = a0 + a1 + a2
    ln_f = (-ln_beta_multi((a0, a1, a2))
            + (a1 - 1.0) * math.log(x) + (a0 + a2 - 1.0) * math.log1p(-x)
            + (a2 - 1.0) * math.log(y) + (a0 + a1 - 1.0) * math.log1p(-y)
            - s * math.log1p(-x * y))
    return math.exp(ln_f)


def sample_arnold(p: ArnoldParams, n: int, stream: RandomStream) -> np.ndarray:
    """Draw n pairs from the five-gamma construction.

    X = (G1+G3)/(G1+G3+G4+G5) and Y = (G2+G4)/(G2+G3+G4+G5).  The pair
    density has no closed form, so this family is sampler-only.
    """
    _check_n(n)
    gen = stream.generator
    out = np.empty((n, 2))
    todo = np.arange(n)
    for _ in range(8):
        k = todo.size
        g = [gen.standard_gamma(a, size=k) for a in (p.a1, p.a2, p.a3, p.a4, p.a5)]
        g1, g2, g3, g4, g5 = g
        with np.errstate(invalid="ignore", divide="ignore"):
            x = (g1 + g3) / (g1 + g3 + g4 + g5)
            y = (g2 + g4) / (g2 + g3 + g4 + g5)
        out[todo, 0] = x
        out[todo, 1] = y
        todo = todo[~(np.isfinite(x) & np.isfinite(y))]
        if todo.size == 0:
            break
    else:
        raise DomainError("sampler kept producing degenerate gamma draws")
    return np.clip(out, _LO, _HI)
