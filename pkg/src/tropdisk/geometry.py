"""Exact rational 2D lattice geometry.

Everything downstream (diagrams, graphs, the disk enumeration) runs on the
primitives in this module.  All coordinates are `fractions.Fraction`; there is
no floating point and no tolerance anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

Scalar = Union[int, Fraction]


class GeometryError(ValueError):
    pass


def frac(value) -> Fraction:
    """Coerce ints, Fractions, strings like '1/2', or (num, den) pairs."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, (tuple, list)) and len(value) == 2:
        return Fraction(int(value[0]), int(value[1]))
    raise GeometryError(f"cannot interpret {value!r} as an exact rational")


@dataclass(frozen=True)
class Vec:
    """Exact rational 2-vector; used for positions and directions alike."""

    x: Fraction
    y: Fraction

    def __init__(self, x: Scalar, y: Scalar):
        object.__setattr__(self, "x", frac(x))
        object.__setattr__(self, "y", frac(y))

    def __add__(self, other: "Vec") -> "Vec":
        return Vec(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vec") -> "Vec":
        return Vec(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Vec":
        return Vec(-self.x, -self.y)

    def __mul__(self, s: Scalar) -> "Vec":
        s = frac(s)
        return Vec(self.x * s, self.y * s)

    __rmul__ = __mul__

    def __truediv__(self, s: Scalar) -> "Vec":
        s = frac(s)
        if s == 0:
            raise GeometryError("division of a vector by zero")
        return Vec(self.x / s, self.y / s)

    def __bool__(self) -> bool:
        return self.x != 0 or self.y != 0

    def __iter__(self):
        yield self.x
        yield self.y

    def __repr__(self) -> str:
        return f"Vec({self.x}, {self.y})"

    def dot(self, other: "Vec") -> Fraction:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Vec") -> Fraction:
        return self.x * other.y - self.y * other.x

    def is_integral(self) -> bool:
        return self.x.denominator == 1 and self.y.denominator == 1

    def is_parallel(self, other: "Vec") -> bool:
        return self.cross(other) == 0

    def as_int_pair(self) -> Tuple[int, int]:
        if not self.is_integral():
            raise GeometryError(f"{self!r} is not an integer vector")
        return (int(self.x), int(self.y))

    def as_rational_pairs(self):
        return [
            [self.x.numerator, self.x.denominator],
            [self.y.numerator, self.y.denominator],
        ]


def vec(x: Scalar, y: Scalar) -> Vec:
    return Vec(x, y)


ZERO = Vec(0, 0)


def det2(a: Vec, b: Vec) -> Fraction:
    """Determinant of the 2x2 matrix with columns a, b."""
    return a.x * b.y - a.y * b.x


def primitive_and_length(v: Vec) -> Tuple[Vec, int]:
    """Factor a nonzero integer vector as (primitive vector, lattice length)."""
    if not v:
        raise GeometryError("zero vector has no primitive direction")
    if not v.is_integral():
        raise GeometryError(f"{v!r} is not an integer vector")
    g = math.gcd(abs(int(v.x)), abs(int(v.y)))
    return Vec(v.x / g, v.y / g), g


def primitive(v: Vec) -> Vec:
    """Primitive integer vector in the direction of v (v may be rational)."""
    if not v:
        raise GeometryError("zero vector has no primitive direction")
    scale = Fraction(v.x.denominator * v.y.denominator)
    w = v * scale
    p, _ = primitive_and_length(w)
    return p


def rational_length(v: Vec, direction: Vec) -> Fraction:
    """Lattice length of v measured in units of a primitive `direction`.

    v must be a rational multiple of `direction`; the signed multiple is
    returned (so the caller keeps orientation information).
    """
    if det2(v, direction) != 0:
        raise GeometryError(f"{v!r} is not parallel to {direction!r}")
    if direction.x != 0:
        return v.x / direction.x
    return v.y / direction.y


def reflect_over(v: Vec, axis: Vec) -> Vec:
    """Linear reflection of v fixing the span of `axis` (exact rational)."""
    if not axis:
        raise GeometryError("reflection axis must be nonzero")
    # r(v) = 2 <v,a>/<a,a> a - v
    aa = axis.dot(axis)
    coeff = 2 * v.dot(axis) / aa
    return axis * coeff - v


def shear_apply(sigma: Vec, pi: Vec, v: Vec) -> Vec:
    """Unipotent shear v + <sigma, v> pi; inverse is shear_apply(-sigma, pi, .)."""
    if sigma.dot(pi) != 0:
        raise GeometryError(f"<{sigma!r},{pi!r}> != 0: not a valid shear")
    return v + pi * sigma.dot(v)


@dataclass(frozen=True)
class Ray:
    origin: Vec
    direction: Vec

    def __post_init__(self):
        if not self.direction:
            raise GeometryError("ray direction must be nonzero")

    def at(self, t: Scalar) -> Vec:
        return self.origin + self.direction * frac(t)


def point_on_segment(p: Vec, a: Vec, b: Vec, closed: bool = True) -> bool:
    """Exact test for p on the segment [a, b] (open or closed)."""
    ab = b - a
    ap = p - a
    if det2(ab, ap) != 0:
        return False
    t = rational_length(ap, ab) if ab else Fraction(0)
    if closed:
        return 0 <= t <= 1
    return 0 < t < 1


def segment_parameter(p: Vec, a: Vec, b: Vec) -> Optional[Fraction]:
    """Parameter t with p = a + t(b-a), or None if p is off the line."""
    ab = b - a
    ap = p - a
    if not ab or det2(ab, ap) != 0:
        return None
    return rational_length(ap, ab)


def lines_intersect(p: Vec, d: Vec, q: Vec, e: Vec) -> Optional[Vec]:
    """Intersection of the lines p + t d and q + s e, or None if parallel."""
    denom = det2(d, e)
    if denom == 0:
        return None
    t = det2(q - p, e) / denom
    return p + d * t


def ray_hits_point(ray: Ray, p: Vec) -> Optional[Fraction]:
    """Parameter t > 0 with ray(t) = p, or None."""
    rel = p - ray.origin
    if det2(ray.direction, rel) != 0:
        return None
    t = rational_length(rel, ray.direction)
    return t if t > 0 else None

def ray_segment_intersect(ray: Ray, a: Vec, b: Vec) -> Optional[Tuple[Fraction, Vec]]:
    """First meeting of an open ray (t > 0) with the closed segment [a, b].

    Returns (t, point) or None.  Collinear overlaps return the smallest
    positive parameter at which the ray enters the segment.
    """
    d = ray.direction
    e = b - a
    denom = det2(d, e)
    if denom == 0:
        if det2(e, ray.origin - a) != 0:
            return None
        # collinear: walk toward whichever endpoint comes first
        ts = []
        for endpoint in (a, b):
            t = rational_length(endpoint - ray.origin, d)
            if t > 0:
                ts.append(t)
        if point_on_segment(ray.origin, a, b):
            ts.append(Fraction(0))
        if not ts:
            return None
        t = min(ts)
        return (t, ray.at(t)) if t > 0 else None
    t = det2(a - ray.origin, e) / denom
    s = det2(a - ray.origin, d) / denom
    if t <= 0 or s < 0 or s > 1:
        return None
    return t, ray.at(t)


def unimodular(a: int, b: int, c: int, d: int):
    """Return the integer matrix [[a, b], [c, d]] as a pair of column Vecs."""
    m = (Vec(a, c), Vec(b, d))
    if abs(det2(*m)) != 1:
        raise GeometryError("matrix is not unimodular")
    return m


def apply_matrix(m, v: Vec) -> Vec:
    """Apply a matrix given as (column1, column2) to v."""
    c1, c2 = m
    return c1 * v.x + c2 * v.y
