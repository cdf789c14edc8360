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

import logging
import math

import numpy as np
from serializable import Serializable

from .geometry import point_segment_distances

logger = logging.getLogger(__name__)

# total turning of a simple counterclockwise polygon is exactly 360
TURNING_TOLERANCE = 1e-6


class OuterBoundaryError(ValueError):
    pass


class OuterShape(Serializable):
    """
    Boundary polygon of the outer face, traversed counterclockwise.

    lengths[i] is the edge from cycle[i] to cycle[i + 1] and turns[i] the
    signed exterior angle at cycle[i] (positive for left turns), so a unit
    triangle has turns (120, 120, 120).
    """

    def __init__(self, cycle, lengths, turns, points):
        self.cycle = cycle
        self.lengths = lengths
        self.turns = turns
        self.points = points

    def __len__(self):
        return len(self.cycle)

    def __str__(self):
        return "OuterShape(vertices=%d, perimeter=%.6f)" % (
            len(self.cycle),
            sum(self.lengths),
        )

    @property
    def turn_signature(self):
        return list(zip(self.lengths, self.turns))

    def encloses(self, points, tol=1e-9):
        """
        Boolean array: which points lie inside the boundary or within `tol`
        of it.
        """
        points = np.asarray(points, dtype=float).reshape(-1, 2)
        polygon = np.asarray(self.points, dtype=float)
        a = polygon
        b = np.roll(polygon, -1, axis=0)
        inside = np.zeros(len(points), dtype=bool)
        for start, end in zip(a, b):
            straddles = (start[1] > points[:, 1]) != (end[1] > points[:, 1])
            with np.errstate(divide="ignore", invalid="ignore"):
                x_cross = start[0] + (points[:, 1] - start[1]) * (end[0] - start[0]) / (
                    end[1] - start[1]
                )
            inside ^= straddles & (points[:, 0] < x_cross)
        for k, p in enumerate(points):
            if not inside[k]:
                repeated = np.repeat(p[None, :], len(a), axis=0)
                inside[k] = np.min(point_segment_distances(repeated, a, b)) <= tol
        return inside


def _direction(origin, target):
    return math.degrees(math.atan2(target[1] - origin[1], target[0] - origin[0])) % 360.0


def _first_vertex_and_edge(embedding):
    coordinates = embedding.coordinates
    start = int(np.lexsort((coordinates[:, 0], coordinates[:, 1]))[0])

    def upward_angle(w):
        # neighbors of the lowest vertex point into the upper half plane
        angle = _direction(coordinates[start], coordinates[w])
        return angle - 360.0 if angle > 270.0 else angle

    return start, min(embedding.adjacency[start], key=upward_angle)


def _next_vertex(embedding, previous, current):
    coordinates = embedding.coordinates
    back = _direction(coordinates[current], coordinates[previous])

    def counterclockwise_from_back(w):
        offset = (_direction(coordinates[current], coordinates[w]) - back) % 360.0
        return offset if offset > 0 else 360.0

    return min(embedding.adjacency[current], key=counterclockwise_from_back)


def outer_boundary(embedding):
    """
    Walk the outer face of a planar embedding counterclockwise, starting at
    the lowest (then leftmost) vertex.

    Returns
    -------
    OuterShape

    Raises
    ------
    OuterBoundaryError when the walk does not close into a simple polygon,
    which happens for disconnected graphs, crossing edges and boundaries
    passing twice through a cut vertex.
    """
    if not embedding.is_connected:
        raise OuterBoundaryError("%s is disconnected" % embedding)
    start, first = _first_vertex_and_edge(embedding)
    cycle = [start]
    seen = {start}
    previous, current = start, first
    while current != start:
        if current in seen:
            raise OuterBoundaryError(
                "Outer face of %s passes vertex %d twice, run verify first"
                % (embedding, current)
            )
        cycle.append(current)
        seen.add(current)
        previous, current = current, _next_vertex(embedding, previous, current)
    if len(cycle) < 3 or _next_vertex(embedding, previous, start) != first:
        raise OuterBoundaryError(
            "Outer face of %s does not close at vertex %d, run verify first"
            % (embedding, start)
        )

    points = embedding.coordinates[cycle]
    outgoing = np.roll(points, -1, axis=0) - points
    incoming = points - np.roll(points, 1, axis=0)
    lengths = np.linalg.norm(outgoing, axis=1)
    cross = incoming[:, 0] * outgoing[:, 1] - incoming[:, 1] * outgoing[:, 0]
    dot = np.einsum("ij,ij->i", incoming, outgoing)
    turns = np.degrees(np.arctan2(cross, dot))
    if abs(turns.sum() - 360.0) > TURNING_TOLERANCE:
        raise OuterBoundaryError(
            "Outer face of %s turns by %.6f degrees instead of 360, run verify first"
            % (embedding, turns.sum())
        )
    shape = OuterShape(
        cycle=[int(v) for v in cycle],
        lengths=[float(x) for x in lengths],
        turns=[float(t) for t in turns],
        points=[tuple(float(c) for c in p) for p in points],
    )
    logger.info("Outer boundary of %s: %s", embedding, shape)
    return shape
