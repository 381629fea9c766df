"""Bregman reference functions (Legendre regularizers) and their divergences.

Each geometry bundles a strictly convex reference function h together with its
gradient, domain tests, and the induced divergence

    D(x, y) = h(x) - h(y) - <grad h(y), x - y>,

which is nonnegative and vanishes exactly at x = y. Geometries are pure and
stateless: safe to share across any number of workers.
"""

from __future__ import annotations

from abc import ABC, abstractmethod

import numpy as np

from .errors import DomainError

__all__ = [
    "BregmanGeometry",
    "EntropyGeometry",
    "EuclideanGeometry",
    "GEOMETRIES",
    "get_geometry",
]


class BregmanGeometry(ABC):
    """Abstract reference function; problems and steppers are geometry-generic."""

    name: str = "abstract"

    def __init__(self, dimension: int):
        if dimension <= 0:
            raise ValueError(f"dimension must be positive, got {dimension}")
        self.dimension = int(dimension)

    # -- domain -------------------------------------------------------------

    @abstractmethod
    def in_domain(self, x: np.ndarray) -> bool:
        """Exact membership test for dom h (no epsilon slack)."""

    @abstractmethod
    def in_interior(self, x: np.ndarray) -> bool:
        """Exact membership test for the interior of dom h."""

    def _check_shape(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if x.shape != (self.dimension,):
            raise ValueError(
                f"expected vector of length {self.dimension}, got shape {x.shape}"
            )
        return x

    def check_domain(self, x: np.ndarray) -> np.ndarray:
        x = self._check_shape(x)
        if not self.in_domain(x):
            raise DomainError(f"point outside dom h for geometry '{self.name}'")
        return x

    def check_interior(self, x: np.ndarray) -> np.ndarray:
        x = self._check_shape(x)
        if not self.in_interior(x):
            raise DomainError(
                f"point outside the interior of dom h for geometry '{self.name}'"
            )
        return x

    # -- reference function -------------------------------------------------

    @abstractmethod
    def value(self, x: np.ndarray) -> float:
        """h(x); requires x in dom h."""

    @abstractmethod
    def gradient(self, x: np.ndarray) -> np.ndarray:
        """grad h(x); requires x strictly interior."""

    @abstractmethod
    def divergence(self, x: np.ndarray, y: np.ndarray) -> float:
        """D(x, y) for x in dom h and y interior; nonnegative."""

    # -- separable scalar pieces (used by the 1-D proximal oracle) ----------

    @abstractmethod
    def scalar_value(self, t: float) -> float:
        """Per-coordinate contribution to h (both shipped geometries separate)."""

    @abstractmethod
    def scalar_slope(self, t: float) -> float:
        """Derivative of scalar_value at t > 0."""


class EntropyGeometry(BregmanGeometry):
    """Boltzmann-Shannon entropy h(x) = sum_j x_j log x_j on the nonnegative orthant.

    The induced divergence is the generalized Kullback-Leibler divergence
    sum_j x_j log(x_j / y_j) - x_j + y_j. The value 0 * log 0 is taken as 0 by
    an explicit branch (continuous extension), never by floating evaluation.
    """

    name = "entropy"

    def in_domain(self, x):
        return bool(np.all(x >= 0.0)) and bool(np.all(np.isfinite(x)))

    def in_interior(self, x):
        return bool(np.all(x > 0.0)) and bool(np.all(np.isfinite(x)))

    def value(self, x):
        x = self.check_domain(x)
        pos = x > 0.0
        out = 0.0
        if np.any(pos):
            xp = x[pos]
            out = float(np.dot(xp, np.log(xp)))
        return out

    def gradient(self, x):
        x = self.check_interior(x)
        return 1.0 + np.log(x)

    def divergence(self, x, y):
        x = self.check_domain(x)
        y = self.check_interior(y)
        # KL form: each term is >= 0, so the sum cannot go below float noise.
        terms = y - x
        pos = x > 0.0
        if np.any(pos):
            xp = x[pos]
            terms[pos] += xp * np.log(xp / y[pos])
        return float(np.sum(terms))

    def scalar_value(self, t):
        return t * np.log(t) if t > 0.0 else 0.0

    def scalar_slope(self, t):
        return 1.0 + np.log(t)


class EuclideanGeometry(BregmanGeometry):
    """Half squared norm h(x) = ||x||^2 / 2 on all of R^n; D(x, y) = ||x-y||^2 / 2."""

    name = "euclidean"

    def in_domain(self, x):
        return bool(np.all(np.isfinite(x)))

    def in_interior(self, x):
        return bool(np.all(np.isfinite(x)))

    def value(self, x):
        x = self.check_domain(x)
        return 0.5 * float(np.dot(x, x))

    def gradient(self, x):
        x = self.check_interior(x)
        return x.copy()

    def divergence(self, x, y):
        x = self.check_domain(x)
        y = self.check_interior(y)
        d = x - y
        return 0.5 * float(np.dot(d, d))

    def scalar_value(self, t):
        return 0.5 * t * t

    def scalar_slope(self, t):
        return t


GEOMETRIES = {
    EntropyGeometry.name: EntropyGeometry,
    EuclideanGeometry.name: EuclideanGeometry,
}


def get_geometry(name: str, dimension: int) -> BregmanGeometry:
    """Instantiate a registered geometry by identifier ("entropy" | "euclidean")."""
    try:
        cls = GEOMETRIES[name]
    except KeyError:
        raise ValueError(
            f"unknown geometry '{name}'; available: {sorted(GEOMETRIES)}"
        ) from None
    return cls(dimension)
