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
Reconstruct an Embedding from drawn strokes: estimate the length of one
matchstick, rescale and flip to the y-up frame, merge coincident endpoints
and split strokes that are two or three matchsticks long.
"""

import logging

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components
from scipy.spatial import cKDTree

from .embedding import Embedding, normalize_edge
from .tolerance_policy import DEFAULT_TOLERANCES

logger = logging.getLogger(__name__)

MAX_MULTIPLIER = 3

# decimals kept when ordering vertices, coarse enough to hide summation noise
VERTEX_ORDER_DECIMALS = 9


class UnitEstimationError(ValueError):
    pass


class SubdivisionError(ValueError):
    pass


class SnapAmbiguityError(ValueError):
    pass


def segment_multipliers(segment_list, unit, tol=DEFAULT_TOLERANCES):
    """
    Number of matchsticks in each stroke, raising UnitEstimationError for
    strokes which aren't close to 1..MAX_MULTIPLIER units long.
    """
    lengths = segment_list.lengths
    multipliers = np.rint(lengths / unit).astype(int)
    for index, (length, k) in enumerate(zip(lengths, multipliers)):
        if k < 1 or k > MAX_MULTIPLIER:
            raise UnitEstimationError(
                "Length %.6g of %s is %.3f units, expected 1 to %d"
                % (length, segment_list.describe(index), length / unit, MAX_MULTIPLIER)
            )
        deviation = abs(length / (k * unit) - 1.0)
        if deviation > tol.unit_tol_raw:
            raise UnitEstimationError(
                "Length %.6g of %s deviates by %.3g from %d units of %.6g"
                % (length, segment_list.describe(index), deviation, k, unit)
            )
    return multipliers


def estimate_unit(segment_list, tol=DEFAULT_TOLERANCES):
    """
    Raw length of one matchstick: the median of each stroke's length divided
    by its multiple of the shortest stroke.
    """
    lengths = segment_list.lengths
    shortest = lengths.min()
    multiples = np.maximum(np.rint(lengths / shortest), 1.0)
    unit = float(np.median(lengths / multiples))
    if not unit > 0:
        raise UnitEstimationError("Could not estimate a positive unit length")
    segment_multipliers(segment_list, unit, tol)
    return unit


def normalized_endpoints(segment_list, unit):
    """
    (N, 2, 2) array of stroke endpoints in unit lengths with y pointing up.
    """
    endpoints = segment_list.endpoint_array().reshape(-1, 2, 2) / unit
    endpoints[:, :, 1] *= -1.0
    return endpoints


def snap_points(points, radius):
    """
    Single-linkage clustering of points within `radius` of each other.

    Returns the cluster label of every point and the cluster centroids.
    Clusters are numbered by lexicographic (x, y) order of their centroids
    and centroids are summed in sorted point order, so both outputs are
    independent of the order of `points`.
    """
    points = np.asarray(points, dtype=float)
    n_points = len(points)
    pairs = cKDTree(points).query_pairs(r=radius, output_type="ndarray")
    graph = coo_matrix(
        (np.ones(len(pairs)), (pairs[:, 0], pairs[:, 1])),
        shape=(n_points, n_points),
    )
    n_clusters, labels = connected_components(graph, directed=False)
    point_order = np.lexsort((points[:, 1], points[:, 0]))
    sums = np.zeros((n_clusters, 2))
    np.add.at(sums, labels[point_order], points[point_order])
    counts = np.bincount(labels, minlength=n_clusters)
    centroids = sums / counts[:, None]
    rounded = np.round(centroids, VERTEX_ORDER_DECIMALS)
    cluster_order = np.lexsort((rounded[:, 1], rounded[:, 0]))
    rank = np.empty(n_clusters, dtype=int)
    rank[cluster_order] = np.arange(n_clusters)
    return rank[labels], centroids[cluster_order]


def _check_ambiguity(centroids, tol):
    close = cKDTree(centroids).query_pairs(r=2 * tol.snap_tol, output_type="ndarray")
    if len(close):
        i, j = close[0]
        raise SnapAmbiguityError(
            "Vertices %d at %s and %d at %s are closer than %g but were not merged, "
            "adjust snap_tol"
            % (i, tuple(centroids[i]), j, tuple(centroids[j]), 2 * tol.snap_tol)
        )


def build_embedding(segment_list, tol=DEFAULT_TOLERANCES, name=None):
    """
    Build the graph embedding drawn by a SegmentList.

    Parameters
    ----------
    segment_list : SegmentList

    tol : TolerancePolicy

    name : str, optional
        Defaults to the segment list's source name.

    Returns
    -------
    Embedding with unit-length edges (within tol.unit_tol_raw) in the
    y-up frame.
    """
    unit = estimate_unit(segment_list, tol)
    multipliers = segment_multipliers(segment_list, unit, tol)
    endpoints = normalized_endpoints(segment_list, unit)
    labels, centroids = snap_points(endpoints.reshape(-1, 2), tol.snap_tol)
    _check_ambiguity(centroids, tol)
    labels = labels.reshape(-1, 2)
    tree = cKDTree(centroids)

    edge_tags = {}
    for index, k in enumerate(multipliers):
        start, end = endpoints[index]
        chain = [labels[index, 0]]
        for step in range(1, k):
            interior = start + (end - start) * (step / k)
            dist, vertex = tree.query(interior, distance_upper_bound=tol.snap_tol)
            if not np.isfinite(dist):
                raise SubdivisionError(
                    "%s is %d units long but has no vertex at its division point %s"
                    % (segment_list.describe(index), k, tuple(interior))
                )
            chain.append(vertex)
        chain.append(labels[index, 1])
        for u, v in zip(chain[:-1], chain[1:]):
            if u == v:
                raise SubdivisionError(
                    "%s collapses onto vertex %d" % (segment_list.describe(index), u)
                )
            tags = edge_tags.setdefault(normalize_edge(u, v), set())
            if segment_list.tags[index]:
                tags.add(segment_list.tags[index])

    edges = sorted(edge_tags)
    embedding = Embedding(
        vertices=[tuple(c) for c in centroids],
        edges=edges,
        edge_tags=[",".join(sorted(edge_tags[e])) or None for e in edges],
        name=segment_list.source_name if name is None else name,
    )
    deviation = np.abs(embedding.edge_lengths - 1.0)
    worst = int(np.argmax(deviation))
    if deviation[worst] > tol.unit_tol_raw:
        raise UnitEstimationError(
            "Edge %s of %s has length %.6f after snapping"
            % (embedding.edges[worst], embedding, embedding.edge_lengths[worst])
        )
    logger.info(
        "Built %s from %d strokes (unit %.4f raw)",
        embedding,
        len(segment_list),
        unit,
    )
    return embedding
