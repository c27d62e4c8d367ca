"""Measurements of a four-circle configuration inside the unit circle.

A configuration is four circles internally tangent to the unit circle at
points (cos 2a_i, sin 2a_i), arranged counterclockwise and pairwise disjoint.
From it we read off the four families of quantities that each satisfy the
3-term relation: chords d, exterior bitangent lengths t, lambda lengths,
and the 2x2 determinants of the unit half-angle columns.  The families are
connected entrywise by

    t_ij = sqrt(1-r_i) * sqrt(1-r_j) * d_ij
    t_ij = lambda_ij * sqrt(2 r_i) * sqrt(2 r_j)
    d_ij = 2 * P_ij

so each is a torus rescaling of the others.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .errors import ConfigurationError
from .horocycles import Horocycle, horocycle_from_tangency, lambda_length
from .models import BoundaryPoint
from .relations import PAIRS, SixTuple

# Circles must clear each other by this much to count as disjoint.
DISJOINT_MARGIN = 1e-9


def _check_pair(i: int, j: int) -> None:
    if not (1 <= i < j <= 4):
        raise IndexError(f"need indices 1 <= i < j <= 4, got ({i}, {j})")


@dataclass(frozen=True)
class ConcyclicConfig:
    """Four half-angles (strictly increasing in [0, pi]) and four radii in (0, 1).

    Construction rejects overlapping or tangent circle pairs; every
    measurement below assumes disjointness.
    """

    alpha: tuple[float, float, float, float]
    r: tuple[float, float, float, float]

    def __post_init__(self):
        alpha = tuple(float(v) for v in self.alpha)
        r = tuple(float(v) for v in self.r)
        if len(alpha) != 4 or len(r) != 4:
            raise ConfigurationError("expected four half-angles and four radii")
        if not all(math.isfinite(v) for v in alpha + r):
            raise ConfigurationError("non-finite configuration values")
        if not (0.0 <= alpha[0] and alpha[3] <= math.pi):
            raise ConfigurationError(f"half-angles must lie in [0, pi]: {alpha}")
        if not (alpha[0] < alpha[1] < alpha[2] < alpha[3]):
            raise ConfigurationError(f"half-angles must increase strictly: {alpha}")
        if not all(0.0 < v < 1.0 for v in r):
            raise ConfigurationError(f"radii must lie in (0, 1): {r}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "r", r)
        for i, j in combinations(range(4), 2):
            ci, cj = self._center(i), self._center(j)
            gap = math.hypot(ci[0] - cj[0], ci[1] - cj[1]) - (r[i] + r[j])
            if gap <= DISJOINT_MARGIN:
                raise ConfigurationError(
                    f"circles {i + 1} and {j + 1} overlap (gap {gap:.3e})"
                )

    def _center(self, k: int) -> tuple[float, float]:
        two_alpha = 2.0 * self.alpha[k]
        scale = 1.0 - self.r[k]
        return (scale * math.cos(two_alpha), scale * math.sin(two_alpha))

    def tangency_point(self, i: int) -> tuple[float, float]:
        """The point A_i = (cos 2a_i, sin 2a_i) on the unit circle (1-based)."""
        if not 1 <= i <= 4:
            raise IndexError(f"index out of range: {i}")
        two_alpha = 2.0 * self.alpha[i - 1]
        return (math.cos(two_alpha), math.sin(two_alpha))

    def horocycle(self, i: int) -> Horocycle:
        """The circle H_i viewed as a horocycle of the Poincare disk (1-based)."""
        if not 1 <= i <= 4:
            raise IndexError(f"index out of range: {i}")
        return horocycle_from_tangency(
            BoundaryPoint(2.0 * self.alpha[i - 1]), self.r[i - 1]
        )


@dataclass(frozen=True)
class MeasurementTable:
    """The four measurement families of a configuration, one SixTuple each."""

    d: SixTuple
    t: SixTuple
    lam: SixTuple
    p: SixTuple


def chord(cfg: ConcyclicConfig, i: int, j: int) -> float:
    """Chord length |A_i - A_j| = 2 sin(a_j - a_i)."""
    _check_pair(i, j)
    return 2.0 * math.sin(cfg.alpha[j - 1] - cfg.alpha[i - 1])


def euclidean_center(cfg: ConcyclicConfig, i: int) -> tuple[float, float]:
    """Center of circle i: distance 1 - r_i from the origin toward A_i."""
    if not 1 <= i <= 4:
        raise IndexError(f"index out of range: {i}")
    return cfg._center(i - 1)


def bitangent(cfg: ConcyclicConfig, i: int, j: int) -> float:
    """Exterior bitangent length, via t_ij = sqrt(1-r_i) sqrt(1-r_j) d_ij."""
    _check_pair(i, j)
    return math.sqrt(1.0 - cfg.r[i - 1]) * math.sqrt(1.0 - cfg.r[j - 1]) * chord(cfg, i, j)


def bitangent_direct(cfg: ConcyclicConfig, i: int, j: int) -> float:
    """Independent bitangent oracle: sqrt(c^2 - (r_i - r_j)^2) from the centers.

    Kept deliberately free of the chord shortcut so it can cross-check
    bitangent(); c is the distance between the two circle centers.
    """
    _check_pair(i, j)
    ci, cj = cfg._center(i - 1), cfg._center(j - 1)
    c_sq = (ci[0] - cj[0]) ** 2 + (ci[1] - cj[1]) ** 2
    dr = cfg.r[i - 1] - cfg.r[j - 1]
    arg = c_sq - dr * dr
    if arg <= 0.0:
        raise ConfigurationError(f"circles {i} and {j} admit no exterior bitangent")
    return math.sqrt(arg)


def lambda_measure(cfg: ConcyclicConfig, i: int, j: int) -> float:
    """Lambda length via t_ij = lambda_ij sqrt(2 r_i) sqrt(2 r_j)."""
    _check_pair(i, j)
    return bitangent(cfg, i, j) / (
        math.sqrt(2.0 * cfg.r[i - 1]) * math.sqrt(2.0 * cfg.r[j - 1])
    )


def lambda_minkowski(cfg: ConcyclicConfig, i: int, j: int) -> float:
    """Lambda length via the light-cone pairing; independent of the bitangent path."""
    _check_pair(i, j)
    return lambda_length(cfg.horocycle(i), cfg.horocycle(j)).value


def plucker_measure(cfg: ConcyclicConfig, i: int, j: int) -> float:
    """Determinant of the unit columns (cos a_i, sin a_i), (cos a_j, sin a_j).

    Equals sin(a_j - a_i) = d_ij / 2 for i < j; antisymmetric in (i, j).
    """
    if not (1 <= i <= 4 and 1 <= j <= 4) or i == j:
        raise IndexError(f"need distinct indices in 1..4, got ({i}, {j})")
    ai, aj = cfg.alpha[i - 1], cfg.alpha[j - 1]
    return math.cos(ai) * math.sin(aj) - math.cos(aj) * math.sin(ai)


def measure_all(cfg: ConcyclicConfig) -> MeasurementTable:
    """All four measurement families, indexed in the order 12,13,14,23,24,34."""
    return MeasurementTable(
        d=SixTuple.from_values(chord(cfg, i, j) for i, j in PAIRS),
        t=SixTuple.from_values(bitangent(cfg, i, j) for i, j in PAIRS),
        lam=SixTuple.from_values(lambda_measure(cfg, i, j) for i, j in PAIRS),
        p=SixTuple.from_values(plucker_measure(cfg, i, j) for i, j in PAIRS),
    )
