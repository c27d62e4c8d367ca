"""The 3-term quadric, the rescaling torus action, and the orbit solver.

Six-tuples are indexed by the pairs 12, 13, 14, 23, 24, 34 and may hold real
or complex scalars.  The quadric is the locus a12*a34 + a14*a23 = a13*a24;
the torus (q1, q2, q3, q4) acts by a_ij -> q_i*q_j*a_ij and preserves it.
Two nonvanishing on-quadric tuples lie in the same orbit exactly when their
cross-ratio invariants a12*a34/(a23*a14) agree, and in that case the solver
below constructs the rescaling, unique up to a global sign.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DegenerateError, NotSameOrbitError, OffQuadricError

Scalar = float | complex

#: Index pairs in storage order.
PAIRS = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))


@dataclass(frozen=True)
class SixTuple:
    """Values indexed by the six pairs from {1,2,3,4}."""

    a12: Scalar
    a13: Scalar
    a14: Scalar
    a23: Scalar
    a24: Scalar
    a34: Scalar

    @classmethod
    def from_values(cls, values) -> "SixTuple":
        vals = tuple(values)
        if len(vals) != 6:
            raise ValueError(f"expected 6 values in order 12,13,14,23,24,34, got {len(vals)}")
        return cls(*vals)

    def values(self) -> tuple[Scalar, ...]:
        return (self.a12, self.a13, self.a14, self.a23, self.a24, self.a34)

    def __iter__(self):
        return iter(self.values())

    @property
    def is_complex(self) -> bool:
        return any(isinstance(v, complex) for v in self.values())


@dataclass(frozen=True)
class TorusElement:
    """Four nonzero scalars acting on six-tuples by a_ij -> q_i*q_j*a_ij."""

    q1: Scalar
    q2: Scalar
    q3: Scalar
    q4: Scalar

    def __post_init__(self):
        if any(q == 0 for q in self.values()):
            raise DegenerateError(f"torus element has a zero component: {self}")

    def values(self) -> tuple[Scalar, ...]:
        return (self.q1, self.q2, self.q3, self.q4)

    def negated(self) -> "TorusElement":
        return TorusElement(-self.q1, -self.q2, -self.q3, -self.q4)


@dataclass(frozen=True)
class RatioTuple:
    """Entrywise ratios c_ij = b_ij / a_ij of two nonvanishing six-tuples."""

    c12: Scalar
    c13: Scalar
    c14: Scalar
    c23: Scalar
    c24: Scalar
    c34: Scalar

    def values(self) -> tuple[Scalar, ...]:
        return (self.c12, self.c13, self.c14, self.c23, self.c24, self.c34)


def residual(t: SixTuple) -> Scalar:
    """a12*a34 + a14*a23 - a13*a24; zero exactly on the quadric."""
    return t.a12 * t.a34 + t.a14 * t.a23 - t.a13 * t.a24


def quadric_scale(t: SixTuple) -> float:
    """Scale for relative residual tests: the largest monomial, floored at 1."""
    return max(abs(t.a12 * t.a34), abs(t.a14 * t.a23), abs(t.a13 * t.a24), 1.0)


def relative_residual(t: SixTuple) -> float:
    return abs(residual(t)) / quadric_scale(t)


def is_on_quadric(t: SixTuple, tol: float) -> bool:
    if tol <= 0.0:
        raise ValueError(f"tolerance must be positive: {tol}")
    return abs(residual(t)) <= tol * quadric_scale(t)


def torus_apply(q: TorusElement, t: SixTuple) -> SixTuple:
    qs = (None, q.q1, q.q2, q.q3, q.q4)
    return SixTuple.from_values(
        qs[i] * qs[j] * v for (i, j), v in zip(PAIRS, t.values())
    )


def cross_ratio_invariant(t: SixTuple) -> Scalar:
    """The complete orbit invariant a12*a34 / (a23*a14) of a nonvanishing tuple."""
    den = t.a23 * t.a14
    if den == 0:
        raise DegenerateError("cross-ratio invariant undefined: a23*a14 = 0")
    return t.a12 * t.a34 / den


def ratio_tuple(a: SixTuple, b: SixTuple) -> RatioTuple:
    if any(v == 0 for v in a.values()) or any(v == 0 for v in b.values()):
        raise DegenerateError("ratio tuple requires all twelve entries nonzero")
    return RatioTuple(*(bv / av for av, bv in zip(a.values(), b.values())))


def _principal_sqrt(x: Scalar) -> Scalar:
    if isinstance(x, complex):
        return cmath.sqrt(x)
    if x < 0.0:
        return cmath.sqrt(x)
    return math.sqrt(x)


def rescaling_solve(a: SixTuple, b: SixTuple, tol: float = 1e-10) -> TorusElement:
    """Find q with q_i*q_j*a_ij = b_ij, or prove the tuples are in different orbits.

    Both tuples must be nonvanishing and on the quadric within tol.  The
    criterion for solvability is equality of the cross-ratio invariants;
    on success q1 is the principal square root of c12*c13/c23 and the rest
    follow as q_j = c_1j/q1.  The other valid answer is -q.

    Raises DegenerateError on zero entries, OffQuadricError when either
    tuple misses the quadric, and NotSameOrbitError when the invariants
    disagree (or the reconstructed q fails to match within tol).
    """
    c = ratio_tuple(a, b)
    for name, t in (("first", a), ("second", b)):
        if not is_on_quadric(t, tol):
            raise OffQuadricError(
                f"{name} tuple is off the quadric: residual {residual(t)}",
                residual=residual(t),
            )
    inv_a = cross_ratio_invariant(a)
    inv_b = cross_ratio_invariant(b)
    if abs(inv_a - inv_b) > tol * max(abs(inv_a), abs(inv_b), 1.0):
        raise NotSameOrbitError(
            f"cross-ratio invariants differ: {inv_a} vs {inv_b}",
            invariant_a=inv_a,
            invariant_b=inv_b,
        )
    q1 = _principal_sqrt(c.c12 * c.c13 / c.c23)
    q = TorusElement(q1, c.c12 / q1, c.c13 / q1, c.c14 / q1)
    # Postcondition: every pair product matches within tol, else the inputs
    # were not genuinely orbit-equivalent at this tolerance.
    qs = (None, q.q1, q.q2, q.q3, q.q4)
    for (i, j), av, bv in zip(PAIRS, a.values(), b.values()):
        if abs(qs[i] * qs[j] * av - bv) > tol * abs(bv):
            raise NotSameOrbitError(
                f"no rescaling reproduces entry {i}{j} within tolerance {tol}",
                invariant_a=inv_a,
                invariant_b=inv_b,
            )
    return q


def cross_ratio_points(x1, x2, x3, x4) -> Scalar:
    """Cross-ratio of four points of the projective line.

    Points are 2-component homogeneous vectors (finite x as (x, 1), infinity
    as (1, 0)); the value is P12*P34/(P23*P14) with P_ij the 2x2 determinant.
    Rescaling any single vector leaves the value unchanged.  Coincidences are
    allowed only while the denominator stays nonzero.
    """

    def det(p, q):
        return p[0] * q[1] - p[1] * q[0]

    den = det(x2, x3) * det(x1, x4)
    if den == 0:
        raise DegenerateError("cross-ratio undefined: P23*P14 = 0")
    return det(x1, x2) * det(x3, x4) / den
