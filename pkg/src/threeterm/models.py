"""Minkowski 3-space and the three models of the hyperbolic plane.

Points live on the upper hyperboloid sheet, in the Poincare disk, or in the
upper half plane; the conversions between models are exact isometries, so any
distance can be computed in whichever model is most convenient.  All types
are immutable values and all operations are pure functions.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DegenerateError, DomainError

TWO_PI = 2.0 * math.pi

# Type invariants (<u,u>=0, <v,v>=-1) are enforced at construction to this
# tolerance, relative to the largest squared component; vectors passing the
# check are renormalized onto the exact surface.
CONSTRUCTION_TOL = 1e-9


@dataclass(frozen=True)
class MinkowskiVec:
    """A vector (x, y, z) in Minkowski 3-space."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        for name in ("x", "y", "z"):
            object.__setattr__(self, name, float(getattr(self, name)))
        if not (math.isfinite(self.x) and math.isfinite(self.y) and math.isfinite(self.z)):
            raise DomainError(f"Minkowski vector has non-finite components: {self}")

    def scaled(self, s: float) -> "MinkowskiVec":
        return MinkowskiVec(s * self.x, s * self.y, s * self.z)


def mink_pair(u: MinkowskiVec, v: MinkowskiVec) -> float:
    """Indefinite pairing xx' + yy' - zz' of Minkowski 3-space."""
    return u.x * v.x + u.y * v.y - u.z * v.z


def _max_comp_sq(u: MinkowskiVec) -> float:
    return max(u.x * u.x, u.y * u.y, u.z * u.z)


@dataclass(frozen=True)
class HyperboloidPoint:
    """A point on the upper hyperboloid sheet: <v,v> = -1, z > 0."""

    v: MinkowskiVec

    def __post_init__(self):
        v = self.v
        scale = _max_comp_sq(v)
        if v.z <= 0.0 or scale == 0.0:
            raise DomainError(f"not on the upper hyperboloid sheet: {v}")
        pairing = mink_pair(v, v)
        if abs(pairing + 1.0) > CONSTRUCTION_TOL * scale:
            raise DomainError(f"<v,v> = {pairing}, not -1 within tolerance: {v}")
        # Renormalize onto the exact sheet so downstream pairings are consistent.
        object.__setattr__(self, "v", v.scaled(1.0 / math.sqrt(-pairing)))


@dataclass(frozen=True)
class LightConePoint:
    """A point on the open positive light cone: <u,u> = 0, z > 0."""

    u: MinkowskiVec

    def __post_init__(self):
        u = self.u
        scale = _max_comp_sq(u)
        if u.z <= 0.0 or scale == 0.0:
            raise DomainError(f"not on the positive light cone: {u}")
        pairing = mink_pair(u, u)
        if abs(pairing) > CONSTRUCTION_TOL * scale:
            raise DomainError(f"<u,u> = {pairing}, not 0 within tolerance: {u}")
        rho = math.hypot(u.x, u.y)
        if rho == 0.0:
            raise DomainError(f"degenerate light-cone vector: {u}")
        # Snap z to sqrt(x^2+y^2); keeps the boundary angle untouched.
        object.__setattr__(self, "u", MinkowskiVec(u.x, u.y, rho))


@dataclass(frozen=True)
class DiskPoint:
    """A point of the open Poincare disk."""

    x: float
    y: float

    def __post_init__(self):
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise DomainError(f"non-finite disk point: ({self.x}, {self.y})")
        if self.x * self.x + self.y * self.y >= 1.0:
            raise DomainError(f"point not inside the unit disk: ({self.x}, {self.y})")

    def as_complex(self) -> complex:
        return complex(self.x, self.y)


@dataclass(frozen=True)
class BoundaryPoint:
    """An ideal point (cos theta, sin theta) of the unit circle.

    The angle is canonicalized to [0, 2*pi) so equal points compare equal.
    """

    theta: float

    def __post_init__(self):
        if not math.isfinite(self.theta):
            raise DomainError(f"non-finite boundary angle: {self.theta}")
        theta = float(self.theta) % TWO_PI
        if theta >= TWO_PI:  # float mod of tiny negatives can round up to 2*pi
            theta = 0.0
        object.__setattr__(self, "theta", theta)

    def xy(self) -> tuple[float, float]:
        return (math.cos(self.theta), math.sin(self.theta))

    def as_complex(self) -> complex:
        return complex(math.cos(self.theta), math.sin(self.theta))


@dataclass(frozen=True)
class UhpPoint:
    """A point of the closed upper half plane.

    Interior points have im > 0; ideal points have im == 0 or carry the
    distinguished at_infinity flag (re/im are zeroed in that case).
    """

    re: float = 0.0
    im: float = 0.0
    at_infinity: bool = False

    def __post_init__(self):
        if self.at_infinity:
            object.__setattr__(self, "re", 0.0)
            object.__setattr__(self, "im", 0.0)
            return
        object.__setattr__(self, "re", float(self.re))
        object.__setattr__(self, "im", float(self.im))
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise DomainError(f"non-finite half-plane point: ({self.re}, {self.im})")
        if self.im < 0.0:
            raise DomainError(f"point below the real axis: ({self.re}, {self.im})")

    @classmethod
    def infinity(cls) -> "UhpPoint":
        return cls(at_infinity=True)

    @property
    def is_ideal(self) -> bool:
        return self.at_infinity or self.im == 0.0

    @property
    def is_interior(self) -> bool:
        return not self.at_infinity and self.im > 0.0

    def as_complex(self) -> complex:
        if self.at_infinity:
            raise DomainError("point at infinity has no complex coordinate")
        return complex(self.re, self.im)

    def projective(self) -> tuple[complex, complex]:
        """Homogeneous coordinates: (w, 1) for finite points, (1, 0) at infinity."""
        if self.at_infinity:
            return (1.0 + 0.0j, 0.0 + 0.0j)
        return (complex(self.re, self.im), 1.0 + 0.0j)


@dataclass(frozen=True)
class Geodesic:
    """A complete geodesic, stored by its two ideal endpoints.

    model is "disk" (endpoints are BoundaryPoints) or "uhp" (endpoints are
    ideal UhpPoints).
    """

    model: str
    endpoints: tuple

    def __post_init__(self):
        if self.model not in ("disk", "uhp"):
            raise DomainError(f"unknown model tag: {self.model!r}")
        a, b = self.endpoints
        if a == b:
            raise DegenerateError(f"geodesic endpoints coincide: {a}")


def disk_to_hyperboloid(p: DiskPoint) -> HyperboloidPoint:
    """Lift a disk point to the hyperboloid: (x,y) -> (2x, 2y, 1+x^2+y^2)/(1-x^2-y^2)."""
    s = p.x * p.x + p.y * p.y
    f = 1.0 / (1.0 - s)
    return HyperboloidPoint(MinkowskiVec(2.0 * p.x * f, 2.0 * p.y * f, (1.0 + s) * f))


def hyperboloid_to_disk(v: HyperboloidPoint) -> DiskPoint:
    """Central projection from (0,0,-1): (x,y,z) -> (x,y)/(1+z)."""
    w = v.v
    f = 1.0 / (1.0 + w.z)
    return DiskPoint(w.x * f, w.y * f)


def lightcone_to_boundary(u: LightConePoint) -> BoundaryPoint:
    """Project a light-cone point to its ideal point on the unit circle."""
    w = u.u
    return BoundaryPoint(math.atan2(w.y, w.x))


def cayley_uhp_to_disk(w: UhpPoint):
    """Cayley transform z -> (z-i)/(z+i).

    Interior points map to DiskPoints, ideal points to BoundaryPoints
    (infinity goes to angle 0, i.e. the point 1).
    """
    if w.at_infinity:
        return BoundaryPoint(0.0)
    z = w.as_complex()
    image = (z - 1j) / (z + 1j)
    if w.is_ideal:
        return BoundaryPoint(cmath.phase(image))
    return DiskPoint(image.real, image.imag)


def cayley_disk_to_uhp(p) -> UhpPoint:
    """Inverse Cayley transform w -> i(1+w)/(1-w).

    Accepts a DiskPoint or BoundaryPoint; the boundary point 1 maps to the
    distinguished point at infinity.
    """
    z = p.as_complex()
    if isinstance(p, BoundaryPoint):
        if abs(z - 1.0) < 1e-15:
            return UhpPoint.infinity()
        image = 1j * (1.0 + z) / (1.0 - z)
        return UhpPoint(image.real, 0.0)
    image = 1j * (1.0 + z) / (1.0 - z)
    return UhpPoint(image.real, image.imag)


def geodesic_ideal_endpoints(w1: UhpPoint, w2: UhpPoint) -> tuple[UhpPoint, UhpPoint]:
    """Ideal endpoints of the half-plane geodesic through two interior points.

    The first endpoint returned is the one beyond w1, the second beyond w2,
    so the order along the geodesic is (first, w1, w2, second).
    """
    if not (w1.is_interior and w2.is_interior):
        raise DomainError("geodesic endpoints require interior points")
    if w1 == w2:
        raise DegenerateError(f"coincident points: {w1}")
    if w1.re == w2.re:
        foot = UhpPoint(w1.re, 0.0)
        if w1.im < w2.im:
            return (foot, UhpPoint.infinity())
        return (UhpPoint.infinity(), foot)
    # Semicircle centered on the real axis through both points.
    sq1 = w1.re * w1.re + w1.im * w1.im
    sq2 = w2.re * w2.re + w2.im * w2.im
    c = (sq1 - sq2) / (2.0 * (w1.re - w2.re))
    radius = math.hypot(w1.re - c, w1.im)
    left, right = UhpPoint(c - radius, 0.0), UhpPoint(c + radius, 0.0)
    if w1.re < w2.re:
        return (left, right)
    return (right, left)


def _det2(a: tuple[complex, complex], b: tuple[complex, complex]) -> complex:
    return a[0] * b[1] - a[1] * b[0]


def hyp_distance_crossratio(w1: UhpPoint, w2: UhpPoint) -> float:
    """Hyperbolic distance via the cross-ratio of (w1, endpoint, w2, endpoint).

    The cross-ratio is evaluated on homogeneous coordinate vectors, with the
    point at infinity as (1, 0); its sign depends on which ideal endpoint is
    listed first, so the distance is |log|CR||, which the arccosh oracle
    confirms is order-independent.
    """
    e1, e2 = geodesic_ideal_endpoints(w1, w2)
    x1, x2, x3, x4 = (p.projective() for p in (w1, e1, w2, e2))
    num = _det2(x1, x2) * _det2(x3, x4)
    den = _det2(x2, x3) * _det2(x1, x4)
    if den == 0:
        raise DegenerateError("degenerate cross-ratio in distance computation")
    return abs(math.log(abs(num / den)))


def hyp_distance_hyperboloid(v1: HyperboloidPoint, v2: HyperboloidPoint) -> float:
    """Hyperbolic distance on the hyperboloid sheet: arccosh(-<v1,v2>)."""
    c = -mink_pair(v1.v, v2.v)
    if c < 1.0:
        if c < 1.0 - 1e-9:
            raise DomainError(f"pairing {-c} outside hyperboloid distance domain")
        c = 1.0
    return math.acosh(c)
