"""Parameter containers and samplers for the shared-component construction.

A four-component Dirichlet vector ``(u11, u10, u01, u00)`` is collapsed to
``X = u11 + u10`` and ``Y = u11 + u01``.  Each margin is then a beta variable,
and the common share ``u11`` (together with the complementary share ``u00``)
is what makes the pair correlated.  The trivariate extension plays the same
game with eight shares, one per cell of a 2x2x2 table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = [
    "AlphaBivariate",
    "AlphaTrivariate",
    "RandomStream",
    "sample_gamma",
    "sample_dirichlet",
    "sample_bivariate",
    "sample_trivariate",
]

# samples are nudged into the open interval; astronomically rare underflow
# of a Dirichlet share would otherwise produce an exact 0 or 1
_OPEN_LO = float(np.nextafter(0.0, 1.0))
_OPEN_HI = float(np.nextafter(1.0, 0.0))


def _check_positive(name: str, value: float) -> float:
    v = float(value)
    if not (math.isfinite(v) and v > 0.0):
        raise DomainError(f"{name} must be finite and > 0, got {value!r}")
    return v


@dataclass(frozen=True)
class AlphaBivariate:
    """Dirichlet weights of the four shares, all strictly positive."""

    a11: float
    a10: float
    a01: float
    a00: float

    def __post_init__(self):
        for name in ("a11", "a10", "a01", "a00"):
            object.__setattr__(self, name, _check_positive(name, getattr(self, name)))

    @property
    def total(self) -> float:
        return self.a11 + self.a10 + self.a01 + self.a00

    # first/second beta parameters of the two margins
    @property
    def a1p(self) -> float:
        return self.a11 + self.a10

    @property
    def a0p(self) -> float:
        return self.a01 + self.a00

    @property
    def ap1(self) -> float:
        return self.a11 + self.a01

    @property
    def ap0(self) -> float:
        return self.a10 + self.a00

    def as_array(self) -> np.ndarray:
        return np.array([self.a11, self.a10, self.a01, self.a00])

    def swapped(self) -> "AlphaBivariate":
        """Weights of (Y, X): the two solo shares trade places."""
        return AlphaBivariate(self.a11, self.a01, self.a10, self.a00)

    def reflected(self) -> "AlphaBivariate":
        """Weights of (1-X, 1-Y): every share pairs with its complement."""
        return AlphaBivariate(self.a00, self.a01, self.a10, self.a11)


@dataclass(frozen=True)
class AlphaTrivariate:
    """Dirichlet weights of the eight shares of the 2x2x2 table."""

    a111: float
    a110: float
    a101: float
    a011: float
    a100: float
    a010: float
    a001: float
    a000: float

    def __post_init__(self):
        for name in self.__dataclass_fields__:
            object.__setattr__(self, name, _check_positive(name, getattr(self, name)))

    @property
    def total(self) -> float:
        return float(np.sum(self.as_array()))

    def as_array(self) -> np.ndarray:
        return np.array([self.a111, self.a110, self.a101, self.a011,
                         self.a100, self.a010, self.a001, self.a000])

    def margin_xy(self) -> AlphaBivariate:
        """Collapse Z: shares aggregate by their (x, y) indices."""
        return AlphaBivariate(self.a111 + self.a110, self.a101 + self.a100,
                              self.a011 + self.a010, self.a001 + self.a000)

    def margin_xz(self) -> AlphaBivariate:
        return AlphaBivariate(self.a111 + self.a101, self.a110 + self.a100,
                              self.a011 + self.a001, self.a010 + self.a000)

    def margin_yz(self) -> AlphaBivariate:
        return AlphaBivariate(self.a111 + self.a011, self.a110 + self.a010,
                              self.a101 + self.a001, self.a100 + self.a000)


class RandomStream:
    """Deterministic random source keyed by a 64-bit seed.

    Wraps numpy's PCG64 generator: period 2**128, and the same seed always
    reproduces the same draw sequence bit for bit on a given install.
    """

    def __init__(self, seed: int):
        if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
            raise DomainError(f"seed must be an integer, got {seed!r}")
        seed = int(seed)
        if not 0 <= seed < 2 ** 64:
            raise DomainError(f"seed must fit in 64 bits, got {seed!r}")
        self.seed = seed
        self._generator = np.random.Generator(np.random.PCG64(seed))

    @property
    def generator(self) -> np.random.Generator:
        return self._generator

    def __repr__(self):
        return f"RandomStream(seed={self.seed})"


def sample_gamma(shape: float, stream: RandomStream, size=None):
    """Draw from Gamma(shape, scale 1).

    Thin wrapper over numpy's sampler, which uses Marsaglia-Tsang
    squeeze/rejection and routes shapes below 1 through the boost identity
    G(a) = G(a+1) * U**(1/a).  Returns a scalar when ``size`` is None.
    """
    shape = _check_positive("shape", shape)
    out = stream.generator.standard_gamma(shape, size=size)
    return float(out) if size is None else out


def sample_dirichlet(alphas, stream: RandomStream, size=None):
    """Normalized independent gamma draws; rows sum to exactly 1.0 - eps-ish.

    ``alphas`` is a length-k sequence of positive reals.  Returns shape (k,)
    when ``size`` is None, else (size, k).
    """
    a = np.asarray([_check_positive("alpha component", v) for v in alphas])
    if a.size < 2:
        raise DomainError("sample_dirichlet needs at least two components")
    n = 1 if size is None else int(size)
    if n < 0:
        raise DomainError(f"size must be >= 0, got {size!r}")
    draws = stream.generator.standard_gamma(a, size=(n, a.size))
    totals = draws.sum(axis=1)
    for _ in range(8):
        dead = totals == 0.0
        if not dead.any():
            break
        # all-underflow row: redraw, possible only for extreme tiny alphas
        redraw = stream.generator.standard_gamma(a, size=(int(dead.sum()), a.size))
        draws[dead] = redraw
        totals = draws.sum(axis=1)
    shares = draws / totals[:, None]
    return shares[0] if size is None else shares


def sample_bivariate(alpha: AlphaBivariate, n: int, stream: RandomStream) -> np.ndarray:
    """n independent (x, y) pairs as an (n, 2) array, all inside (0, 1)."""
    n = int(n)
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n!r}")
    shares = sample_dirichlet(alpha.as_array(), stream, size=n)
    x = shares[:, 0] + shares[:, 1]
    y = shares[:, 0] + shares[:, 2]
    return np.clip(np.column_stack((x, y)), _OPEN_LO, _OPEN_HI)


def sample_trivariate(alpha: AlphaTrivariate, n: int, stream: RandomStream) -> np.ndarray:
    """n independent (x, y, z) triples as an (n, 3) array, all inside (0, 1)."""
    n = int(n)
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n!r}")
    shares = sample_dirichlet(alpha.as_array(), stream, size=n)
    x = shares[:, 0] + shares[:, 1] + shares[:, 2] + shares[:, 4]
    y = shares[:, 0] + shares[:, 1] + shares[:, 3] + shares[:, 5]
    z = shares[:, 0] + shares[:, 2] + shares[:, 3] + shares[:, 6]
    return np.clip(np.column_stack((x, y, z)), _OPEN_LO, _OPEN_HI)
