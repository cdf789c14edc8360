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
Point groups of embeddings and of outer shapes. Every isometry of a finite
point set fixes its centroid, so rotations and mirror axes are only sought
through it.
"""

import logging
import math

import numpy as np
from scipy.spatial import cKDTree
from serializable import Serializable

from .embedding import normalize_edge
from .geometry import Point, normalize_degrees, reflection_matrix, rotation_matrix
from .tolerance_policy import DEFAULT_TOLERANCES

logger = logging.getLogger(__name__)


class SymmetryReport(Serializable):
    def __init__(
        self,
        rotation_order,
        mirror_axes,
        point_symmetric,
        group,
        centroid,
        rotation_angles=None,
    ):
        """
        Parameters
        ----------
        rotation_order : int
            Number of rotations (identity included) mapping the object onto
            itself.

        mirror_axes : list of float
            Directions of the mirror axes through the centroid, degrees in
            [0, 180).

        point_symmetric : bool
            Whether the rotation by 180 degrees is a symmetry.

        group : str
            "C_k" or "D_k" with k = rotation_order.

        centroid : Point

        rotation_angles : list of float, optional
            Angles of the accepted rotations, degrees in [0, 360).
        """
        self.rotation_order = rotation_order
        self.mirror_axes = mirror_axes
        self.point_symmetric = point_symmetric
        self.group = group
        self.centroid = centroid
        self.rotation_angles = rotation_angles if rotation_angles is not None else [0.0]

    @property
    def mirror_count(self):
        return len(self.mirror_axes)

    @property
    def is_trivial(self):
        return self.rotation_order == 1 and self.mirror_count == 0

    def __str__(self):
        return "SymmetryReport(group=%s, mirrors=%d, point_symmetric=%s)" % (
            self.group,
            self.mirror_count,
            self.point_symmetric,
        )

    def to_lines(self, prefix="symmetry"):
        lines = [
            "%s.group: %s" % (prefix, self.group),
            "%s.rotation_order: %d" % (prefix, self.rotation_order),
            "%s.mirror_count: %d" % (prefix, self.mirror_count),
            "%s.point_symmetric: %s" % (prefix, self.point_symmetric),
            "%s.centroid: %.6f %.6f" % (prefix, self.centroid.x, self.centroid.y),
        ]
        if self.mirror_axes:
            lines.append(
                "%s.mirror_axes: %s"
                % (prefix, " ".join("%.6f" % axis for axis in self.mirror_axes))
            )
        return lines


def group_label(rotation_order, mirror_count):
    return "%s_%d" % ("D" if mirror_count else "C", rotation_order)


def fitted_rotation_angle(points, images):
    """
    Least-squares angle (degrees) of the rotation about the origin taking
    points onto images.
    """
    x, y = points[:, 0], points[:, 1]
    u, v = images[:, 0], images[:, 1]
    return normalize_degrees(
        math.degrees(math.atan2(np.sum(x * v - y * u), np.sum(x * u + y * v)))
    )


def fitted_mirror_axis(points, images):
    """
    Least-squares direction (degrees in [0, 180)) of the mirror axis through
    the origin taking points onto images.
    """
    x, y = points[:, 0], points[:, 1]
    u, v = images[:, 0], images[:, 1]
    double_angle = math.degrees(math.atan2(np.sum(x * v + y * u), np.sum(x * u - y * v)))
    return normalize_degrees(double_angle) / 2.0


def vertex_image(embedding, matrix, tol=DEFAULT_TOLERANCES, tree=None):
    """
    Vertex permutation induced by the linear map `matrix` about the vertex
    centroid, or None when the map is not a symmetry of the embedding: some
    vertex lands farther than tol.snap_tol from every vertex, two vertices
    land on the same one, or an edge lands on a non-edge.
    """
    centroid = embedding.coordinates.mean(axis=0)
    centered = embedding.coordinates - centroid
    if tree is None:
        tree = cKDTree(centered)
    distances, image = tree.query(centered.dot(np.asarray(matrix).T), distance_upper_bound=tol.snap_tol)
    if not np.all(np.isfinite(distances)):
        return None
    if len(set(image.tolist())) != embedding.n_vertices:
        return None
    for i, j in embedding.edges:
        if normalize_edge(image[i], image[j]) not in embedding.edge_set:
            return None
    return image


def is_symmetry(embedding, matrix, tol=DEFAULT_TOLERANCES):
    return vertex_image(embedding, matrix, tol) is not None


def isometry_group(embedding, tol=DEFAULT_TOLERANCES):
    """
    Find the rotations and reflections about the vertex centroid which map
    the embedding onto itself.

    Candidates take a vertex of largest distance from the centroid to every
    other vertex at the same distance (within tol.snap_tol); each candidate
    is accepted or rejected with `vertex_image`.
    """
    if embedding.n_vertices < 3:
        raise ValueError("Symmetry detection needs at least 3 vertices, got %s" % embedding)
    centroid = embedding.coordinates.mean(axis=0)
    centered = embedding.coordinates - centroid
    radii = np.linalg.norm(centered, axis=1)
    angles = np.degrees(np.arctan2(centered[:, 1], centered[:, 0]))
    reference = int(np.argmax(radii))
    tree = cKDTree(centered)

    rotation_angles = []
    mirror_axes = []
    for target in np.flatnonzero(np.abs(radii - radii[reference]) <= tol.snap_tol):
        turn = angles[target] - angles[reference]
        image = vertex_image(embedding, rotation_matrix(turn), tol, tree)
        if image is not None:
            rotation_angles.append(fitted_rotation_angle(centered, centered[image]))
        axis = (angles[target] + angles[reference]) / 2.0
        image = vertex_image(embedding, reflection_matrix(axis), tol, tree)
        if image is not None:
            mirror_axes.append(fitted_mirror_axis(centered, centered[image]))

    rotation_order = len(rotation_angles)
    report = SymmetryReport(
        rotation_order=rotation_order,
        mirror_axes=sorted(mirror_axes),
        point_symmetric=(rotation_order % 2 == 0),
        group=group_label(rotation_order, len(mirror_axes)),
        centroid=Point(*centroid),
        rotation_angles=sorted(rotation_angles),
    )
    logger.info("Isometry group of %s: %s", embedding, report)
    return report


def _angle_difference(a, b):
    return abs((a - b + 180.0) % 360.0 - 180.0)


def shape_symmetry(shape, tol=DEFAULT_TOLERANCES):
    """
    Symmetries of an OuterShape read off its cyclic sequence of edge lengths
    and exterior turns: a cyclic shift which leaves the sequence unchanged
    is a rotation, a shift of the reversed sequence a reflection. Lengths
    are compared within tol.snap_tol, turns within tol.symmetry_angle_tol.
    """
    lengths = np.asarray(shape.lengths, dtype=float)
    turns = np.asarray(shape.turns, dtype=float)
    points = np.asarray(shape.points, dtype=float)
    n = len(lengths)
    centroid = points.mean(axis=0)
    centered = points - centroid
    indices = np.arange(n)
    angle_tol = tol.symmetry_angle_tol

    def matches(turn_order, length_order):
        return bool(
            np.all(np.abs(lengths[length_order] - lengths) <= tol.snap_tol)
            and np.all(_angle_difference(turns[turn_order], turns) <= angle_tol)
        )

    rotation_angles = []
    mirror_axes = []
    for shift in range(n):
        # vertex k -> vertex k + shift
        rotated = (indices + shift) % n
        if matches(rotated, rotated):
            rotation_angles.append(fitted_rotation_angle(centered, centered[rotated]))
        # vertex k -> vertex shift - k, edge k -> edge shift - k - 1
        mirrored = (shift - indices) % n
        if matches(mirrored, (shift - indices - 1) % n):
            mirror_axes.append(fitted_mirror_axis(centered, centered[mirrored]))

    rotation_order = len(rotation_angles)
    return SymmetryReport(
        rotation_order=rotation_order,
        mirror_axes=sorted(mirror_axes),
        point_symmetric=(rotation_order % 2 == 0),
        group=group_label(rotation_order, len(mirror_axes)),
        centroid=Point(*centroid),
        rotation_angles=sorted(rotation_angles),
    )
