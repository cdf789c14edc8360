# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Planar geometry primitives shared by every other module: points, segments,
distances and directions, plus vectorized variants over arrays of segments
for the quadratic pair scans.
"""

import math

import numpy as np
from serializable import Serializable


class DegenerateSegmentError(ValueError):
    pass


class Point(Serializable):
    """
    Position of a vertex in the plane, measured in unit-edge lengths once
    an embedding has been built.
    """

    def __init__(self, x, y):
        x = float(x)
        y = float(y)
        if not (math.isfinite(x) and math.isfinite(y)):
            raise ValueError("Expected finite coordinates, got (%s, %s)" % (x, y))
        self.x = x
        self.y = y

    def __str__(self):
        return "Point(x=%r, y=%r)" % (self.x, self.y)

    def __eq__(self, other):
        return other.__class__ is Point and self.to_tuple() == other.to_tuple()

    def __hash__(self):
        return hash(self.to_tuple())

    def __iter__(self):
        yield self.x
        yield self.y

    def to_tuple(self):
        return (self.x, self.y)

    def to_dict(self):
        return {"x": self.x, "y": self.y}


class Segment(Serializable):
    """
    A drawn edge between two distinct points.
    """

    def __init__(self, a, b):
        if not isinstance(a, Point):
            a = Point(*a)
        if not isinstance(b, Point):
            b = Point(*b)
        if a == b:
            raise DegenerateSegmentError("Segment endpoints coincide at %s" % (a,))
        self.a = a
        self.b = b

    def __str__(self):
        return "Segment(a=%s, b=%s)" % (self.a, self.b)

    def __eq__(self, other):
        return other.__class__ is Segment and self.to_tuple() == other.to_tuple()

    def __hash__(self):
        return hash(self.to_tuple())

    def to_tuple(self):
        return (self.a.to_tuple(), self.b.to_tuple())

    def to_dict(self):
        return {"a": self.a, "b": self.b}

    @property
    def length(self):
        return distance(self.a, self.b)

    def point_at(self, param):
        """
        Point at fractional position `param` along the segment, 0 at `a`
        and 1 at `b`.
        """
        return Point(
            self.a.x + param * (self.b.x - self.a.x),
            self.a.y + param * (self.b.y - self.a.y),
        )


def distance(p, q):
    return math.hypot(p.x - q.x, p.y - q.y)


def point_segment_distance(p, s):
    """
    Distance from `p` to the closed segment `s` along with the clamped
    projection parameter of the closest point (0 at s.a, 1 at s.b).
    """
    dx = s.b.x - s.a.x
    dy = s.b.y - s.a.y
    param = ((p.x - s.a.x) * dx + (p.y - s.a.y) * dy) / (dx * dx + dy * dy)
    param = min(1.0, max(0.0, param))
    closest_x = s.a.x + param * dx
    closest_y = s.a.y + param * dy
    return math.hypot(p.x - closest_x, p.y - closest_y), param


def _orientation(a, b, c):
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


def _within_bounding_box(p, s):
    return (
        min(s.a.x, s.b.x) <= p.x <= max(s.a.x, s.b.x)
        and min(s.a.y, s.b.y) <= p.y <= max(s.a.y, s.b.y)
    )


def segments_intersect(s, t):
    """
    Do the closed segments share at least one point? Touching endpoints and
    collinear overlaps count.
    """
    o1 = _orientation(s.a, s.b, t.a)
    o2 = _orientation(s.a, s.b, t.b)
    o3 = _orientation(t.a, t.b, s.a)
    o4 = _orientation(t.a, t.b, s.b)
    if ((o1 > 0 and o2 < 0) or (o1 < 0 and o2 > 0)) and (
        (o3 > 0 and o4 < 0) or (o3 < 0 and o4 > 0)
    ):
        return True
    # an endpoint lying exactly on the other segment
    return (
        (o1 == 0 and _within_bounding_box(t.a, s))
        or (o2 == 0 and _within_bounding_box(t.b, s))
        or (o3 == 0 and _within_bounding_box(s.a, t))
        or (o4 == 0 and _within_bounding_box(s.b, t))
    )


def segment_separation(s, t):
    """
    Minimum Euclidean distance between two closed segments, exactly 0 when
    they share a point.
    """
    if segments_intersect(s, t):
        return 0.0
    return min(
        point_segment_distance(s.a, t)[0],
        point_segment_distance(s.b, t)[0],
        point_segment_distance(t.a, s)[0],
        point_segment_distance(t.b, s)[0],
    )


def direction_angle(origin, target):
    """
    Angle in degrees within [0, 360) of the vector from `origin` to `target`,
    counterclockwise from the +x axis in the y-up frame.
    """
    dx = target.x - origin.x
    dy = target.y - origin.y
    if dx == 0 and dy == 0:
        raise DegenerateSegmentError(
            "Direction undefined between coincident points %s" % (origin,)
        )
    return normalize_degrees(math.degrees(math.atan2(dy, dx)))


def normalize_degrees(angle):
    angle = angle % 360.0
    # -1e-17 % 360.0 rounds up to 360.0
    if angle >= 360.0:
        angle -= 360.0
    return angle


def _cross_rows(u, v):
    return u[:, 0] * v[:, 1] - u[:, 1] * v[:, 0]


def point_segment_distances(p, a, b):
    """
    Row-wise distance from points `p` to segments `a`-`b`, all (N, 2) arrays.
    """
    d = b - a
    param = np.einsum("ij,ij->i", p - a, d) / np.einsum("ij,ij->i", d, d)
    param = np.clip(param, 0.0, 1.0)
    return np.linalg.norm(a + param[:, None] * d - p, axis=1)


def segment_separations(a, b, c, d):
    """
    Row-wise separation between segments a-b and c-d given as (N, 2) arrays,
    the vectorized counterpart of `segment_separation`.
    """
    o1 = _cross_rows(b - a, c - a)
    o2 = _cross_rows(b - a, d - a)
    o3 = _cross_rows(d - c, a - c)
    o4 = _cross_rows(d - c, b - c)
    crossing = (o1 * o2 < 0) & (o3 * o4 < 0)
    separation = np.minimum.reduce(
        [
            point_segment_distances(a, c, d),
            point_segment_distances(b, c, d),
            point_segment_distances(c, a, b),
            point_segment_distances(d, a, b),
        ]
    )
    separation[crossing] = 0.0
    return separation


def rotation_matrix(degrees):
    theta = math.radians(degrees)
    c = math.cos(theta)
    s = math.sin(theta)
    return np.array([[c, -s], [s, c]])


def reflection_matrix(axis_degrees):
    """
    Reflection across the line through the origin at `axis_degrees`.
    """
    theta = math.radians(2.0 * axis_degrees)
    c = math.cos(theta)
    s = math.sin(theta)
    return np.array([[c, s], [s, -c]])
