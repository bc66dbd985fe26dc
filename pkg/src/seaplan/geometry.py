"""Planar geometry for vessel motion analysis.

Coordinates are local east/north meters (x east, y north). Headings and
bearings are compass degrees, clockwise from north. All operations are pure
functions over immutable values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "GeometryError",
    "Vec2",
    "Ray",
    "DiscObstacle",
    "heading_to_unit",
    "absolute_bearing",
    "wrap180",
    "ray_intersects_disc",
    "in_velocity_obstacle",
    "time_to_cpa",
    "distance_at_cpa",
    "relative_bearing",
]


class GeometryError(ValueError):
    """Raised for degenerate geometric input (coincident points, non-finite values)."""


@dataclass(frozen=True)
class Vec2:
    """2D vector in meters (or meters/second when used as a velocity)."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise GeometryError(f"non-finite vector components ({self.x}, {self.y})")

    def __add__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x - other.x, self.y - other.y)

    def scaled(self, factor: float) -> "Vec2":
        return Vec2(self.x * factor, self.y * factor)

    def dot(self, other: "Vec2") -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Vec2") -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def distance_to(self, other: "Vec2") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


@dataclass(frozen=True)
class Ray:
    """Half-line from `origin` in the direction of `direction` (t >= 0).

    A zero direction vector is allowed and degrades intersection tests to
    point containment, which covers stationary vessels.
    """

    origin: Vec2
    direction: Vec2


@dataclass(frozen=True)
class DiscObstacle:
    """Disc of positive radius; the Minkowski sum of two vessel discs is the
    disc of summed radii centered on one of them."""

    center: Vec2
    radius: float

    def __post_init__(self):
        if not (self.radius > 0.0 and math.isfinite(self.radius)):
            raise GeometryError(f"disc radius must be positive, got {self.radius}")


def heading_to_unit(heading_deg: float) -> Vec2:
    """Unit vector for a compass heading (0 deg = north = +y, 90 deg = east = +x)."""
    r = math.radians(heading_deg)
    return Vec2(math.sin(r), math.cos(r))


def absolute_bearing(origin: Vec2, point: Vec2) -> float:
    """Compass bearing of `point` as seen from `origin`, in [0, 360)."""
    if origin.x == point.x and origin.y == point.y:
        raise GeometryError("bearing undefined for coincident points")
    return math.degrees(math.atan2(point.x - origin.x, point.y - origin.y)) % 360.0


def wrap180(angle_deg: float) -> float:
    """Wrap an angle to [-180, 180)."""
    return (angle_deg + 180.0) % 360.0 - 180.0


def ray_intersects_disc(ray: Ray, disc: DiscObstacle) -> bool:
    """True iff some point of the ray lies inside or on the disc.

    Radius comparisons are exact (<=); acceptance thresholds used by callers
    dominate representational error by many orders of magnitude.
    """
    rel = disc.center - ray.origin
    dir_sq = ray.direction.dot(ray.direction)
    if dir_sq == 0.0:
        return rel.norm() <= disc.radius
    t = max(0.0, rel.dot(ray.direction) / dir_sq)
    closest = ray.origin + ray.direction.scaled(t)
    return closest.distance_to(disc.center) <= disc.radius


def in_velocity_obstacle(p_a: Vec2, v_a: Vec2, p_b: Vec2, v_b: Vec2,
                         combined_radius: float) -> bool:
    """Velocity-obstacle membership test for disc-shaped vessels.

    True iff vessel A at `p_a` holding velocity `v_a` will eventually come
    within `combined_radius` of vessel B at `p_b` holding `v_b`: the ray from
    `p_a` along the relative velocity intersects the combined disc at `p_b`.
    """
    return ray_intersects_disc(
        Ray(p_a, v_a - v_b), DiscObstacle(p_b, combined_radius)
    )


def time_to_cpa(p_a: Vec2, p_b: Vec2, v_a: Vec2, v_b: Vec2) -> float:
    """Time in seconds until the closest point of approach, clamped to >= 0.

    Returns 0 for zero relative velocity (separation is constant) and 0 for
    diverging vessels, whose closest approach is now.
    """
    v_rel = v_a - v_b
    speed_sq = v_rel.dot(v_rel)
    if speed_sq == 0.0:
        return 0.0
    p_rel = p_a - p_b
    return max(0.0, -p_rel.dot(v_rel) / speed_sq)


def distance_at_cpa(p_a: Vec2, p_b: Vec2, v_a: Vec2, v_b: Vec2) -> float:
    """Separation in meters at the (future) closest point of approach."""
    t = time_to_cpa(p_a, p_b, v_a, v_b)
    rel = (p_a - p_b) + (v_a - v_b).scaled(t)
    return rel.norm()


def relative_bearing(observer, point: Vec2) -> float:
    """Bearing of `point` measured clockwise from the observer's heading, in [0, 360).

    `observer` needs `position` and `heading` attributes (a vessel state).
    Raises GeometryError when `point` coincides with the observer position.
    """
    return (absolute_bearing(observer.position, point) - observer.heading) % 360.0
