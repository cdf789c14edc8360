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

from serializable import Serializable
from typechecks import require_integer

from .embedding import normalize_edge
from .geometry import direction_angle

CLOCKWISE = "clockwise"
COUNTERCLOCKWISE = "counterclockwise"
ORIENTATIONS = (CLOCKWISE, COUNTERCLOCKWISE)


class AngleFanError(ValueError):
    pass


class AngleFan(Serializable):
    """
    Consecutive angles between the edges around one vertex. angles[k] lies
    between neighbors[k] and neighbors[k + 1] (wrapping around), measured in
    the given rotational direction of the y-up frame.
    """

    def __init__(self, vertex, angles, order, neighbors):
        self.vertex = vertex
        self.angles = angles
        self.order = order
        self.neighbors = neighbors

    def __len__(self):
        return len(self.angles)

    def __str__(self):
        return "AngleFan(vertex=%d, order=%s, angles=[%s])" % (
            self.vertex,
            self.order,
            ", ".join("%.6f" % a for a in self.angles),
        )

    @property
    def total(self):
        return sum(self.angles)

    def to_lines(self, prefix="angle_fan"):
        return [
            "%s.vertex: %d" % (prefix, self.vertex),
            "%s.order: %s" % (prefix, self.order),
            "%s.angles: %s" % (prefix, " ".join("%.9f" % a for a in self.angles)),
            "%s.total: %.12f" % (prefix, self.total),
        ]


def angle_fan(embedding, vertex, start_edge, orientation=CLOCKWISE):
    """
    Angles between the edges at `vertex`, starting at `start_edge` and
    turning in `orientation` ("clockwise" or "counterclockwise").
    """
    require_integer(vertex, "vertex")
    if orientation not in ORIENTATIONS:
        raise AngleFanError(
            "Expected orientation in %s, got '%s'" % (ORIENTATIONS, orientation)
        )
    start_edge = normalize_edge(*start_edge)
    if vertex not in start_edge:
        raise AngleFanError("Vertex %d is not an endpoint of edge %s" % (vertex, start_edge))
    if not embedding.has_edge(*start_edge):
        raise AngleFanError("No edge %s in %s" % (start_edge, embedding))
    center = embedding.point(vertex)
    first = start_edge[1] if start_edge[0] == vertex else start_edge[0]
    directions = {
        w: direction_angle(center, embedding.point(w)) for w in embedding.adjacency[vertex]
    }
    sign = -1.0 if orientation == CLOCKWISE else 1.0

    def offset(w):
        return (sign * (directions[w] - directions[first])) % 360.0

    neighbors = sorted(directions, key=offset)
    offsets = [offset(w) for w in neighbors] + [360.0]
    angles = [b - a for a, b in zip(offsets[:-1], offsets[1:])]
    return AngleFan(
        vertex=vertex,
        angles=angles,
        order=orientation,
        neighbors=neighbors,
    )
