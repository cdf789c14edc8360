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
Geometric subgraph matching of the rigid building blocks (kite, triplet
kite, double kite, reverse double kite) inside larger embeddings. Every
unit edge of the host is tried as the image of the pattern's first edge,
in both directions and with and without a reflection of the pattern.
"""

import logging
import math

import numpy as np
from scipy.linalg import orthogonal_procrustes
from scipy.spatial import cKDTree
from serializable import Serializable

from .embedding import normalize_edge
from .geometry import rotation_matrix
from .symmetry import isometry_group
from .tolerance_policy import DEFAULT_TOLERANCES

logger = logging.getLogger(__name__)

# near-matches may miss at most this many pattern vertices
MAX_MISSING_VERTICES = 2


class Pattern(Serializable):
    def __init__(self, name, embedding, automorphism_count):
        self.name = name
        self.embedding = embedding
        self.automorphism_count = automorphism_count

    def __str__(self):
        return "Pattern(name='%s', vertices=%d, edges=%d)" % (
            self.name,
            self.embedding.n_vertices,
            self.embedding.n_edges,
        )

    def __eq__(self, other):
        return (
            other.__class__ is Pattern
            and self.name == other.name
            and self.embedding == other.embedding
        )

    def __hash__(self):
        return hash((self.name, self.embedding))

    @classmethod
    def from_embedding(cls, name, embedding, tol=DEFAULT_TOLERANCES):
        group = isometry_group(embedding, tol)
        return cls(
            name=name,
            embedding=embedding,
            automorphism_count=group.rotation_order + group.mirror_count,
        )


class MotifMatch(Serializable):
    """
    One occurrence of a pattern: vertex_map[i] is the host vertex matched to
    pattern vertex i, or None for the vertices a near-match misses.
    """

    def __init__(self, pattern, vertex_map, reflected, rms_error):
        self.pattern = pattern
        self.vertex_map = vertex_map
        self.reflected = reflected
        self.rms_error = rms_error

    def __str__(self):
        return "MotifMatch(pattern='%s', host_vertices=%s, reflected=%s)" % (
            self.pattern,
            self.host_vertices,
            self.reflected,
        )

    @property
    def host_vertices(self):
        return tuple(sorted(v for v in self.vertex_map if v is not None))

    @property
    def missing(self):
        return sum(1 for v in self.vertex_map if v is None)

    def host_edges(self, pattern):
        return [
            normalize_edge(self.vertex_map[i], self.vertex_map[j])
            for i, j in pattern.embedding.edges
            if self.vertex_map[i] is not None and self.vertex_map[j] is not None
        ]


def _rms_after_alignment(pattern_points, host_points):
    """
    Root mean square distance after the best orthogonal fit of the centered
    pattern points onto the centered host points.
    """
    p = pattern_points - pattern_points.mean(axis=0)
    h = host_points - host_points.mean(axis=0)
    rotation, _ = orthogonal_procrustes(p, h)
    return float(math.sqrt(np.mean(np.sum((p.dot(rotation) - h) ** 2, axis=1))))


def _hypotheses(host, pattern_points, seed):
    """
    Pattern points moved so that the seed edge lies on each directed host
    edge in turn.
    """
    a, b = seed
    seed_angle = math.degrees(
        math.atan2(
            pattern_points[b, 1] - pattern_points[a, 1],
            pattern_points[b, 0] - pattern_points[a, 0],
        )
    )
    relative = pattern_points - pattern_points[a]
    coordinates = host.coordinates
    for i, j in host.edges:
        for u, v in ((i, j), (j, i)):
            direction = coordinates[v] - coordinates[u]
            angle = math.degrees(math.atan2(direction[1], direction[0]))
            yield relative.dot(rotation_matrix(angle - seed_angle).T) + coordinates[u]


def _match_hypothesis(host, tree, pattern, placed, tol):
    distances, image = tree.query(placed, distance_upper_bound=tol.snap_tol)
    matched = np.isfinite(distances)
    missing = int(np.sum(~matched))
    if missing > MAX_MISSING_VERTICES:
        return None
    vertex_map = [int(v) if ok else None for v, ok in zip(image, matched)]
    hits = [v for v in vertex_map if v is not None]
    if len(set(hits)) != len(hits):
        return None
    for i, j in pattern.embedding.edges:
        if vertex_map[i] is None or vertex_map[j] is None:
            continue
        if not host.has_edge(vertex_map[i], vertex_map[j]):
            return None
    return vertex_map


def _search(host, pattern, tol):
    pattern_points = np.array(pattern.embedding.coordinates)
    seed = pattern.embedding.edges[0]
    tree = cKDTree(host.coordinates)
    full = {}
    near = {}
    for reflected in (False, True):
        points = pattern_points * np.array([1.0, -1.0]) if reflected else pattern_points
        for placed in _hypotheses(host, points, seed):
            vertex_map = _match_hypothesis(host, tree, pattern, placed, tol)
            if vertex_map is None:
                continue
            found = [k for k, v in enumerate(vertex_map) if v is not None]
            if len(found) < 3:
                continue
            rms_error = _rms_after_alignment(
                points[found], host.coordinates[[vertex_map[k] for k in found]]
            )
            match = MotifMatch(
                pattern=pattern.name,
                vertex_map=vertex_map,
                reflected=reflected,
                rms_error=rms_error,
            )
            target = full if match.missing == 0 else near
            target.setdefault(match.host_vertices, match)
    return full, near


def _ordered(matches):
    return [matches[key] for key in sorted(matches, key=lambda key: (key[0], key))]


def edge_disjoint(matches, pattern):
    """
    Walks `matches` in order and keeps each one sharing no host edge with
    an occurrence kept before it. A chain of three kites holds two
    overlapping double kites, of which only the first is kept.
    """
    kept = []
    claimed = set()
    for match in matches:
        edges = set(match.host_edges(pattern))
        if edges & claimed:
            continue
        kept.append(match)
        claimed.update(edges)
    return kept


def find_motifs(host, pattern, tol=DEFAULT_TOLERANCES):
    """
    Occurrences of `pattern` in `host` sharing no edge with each other,
    sorted by their smallest host vertex.
    """
    full, _ = _search(host, pattern, tol)
    matches = edge_disjoint(_ordered(full), pattern)
    logger.info("Found %d occurrences of %s in %s", len(matches), pattern, host)
    return matches


def find_near_motifs(host, pattern, tol=DEFAULT_TOLERANCES):
    """
    Placements of `pattern` missing between 1 and MAX_MISSING_VERTICES
    vertices, excluding those lying inside a full occurrence.
    """
    full, near = _search(host, pattern, tol)
    covered = [set(key) for key in full]
    kept = {
        key: match
        for key, match in near.items()
        if not any(set(key) <= vertices for vertices in covered)
    }
    return _ordered(kept)


class MotifInventory(Serializable):
    def __init__(self, counts, near_match_counts, coverage, matches, overlapping_counts=None):
        """
        Parameters
        ----------
        counts : dict
            Pattern name to number of full occurrences.

        near_match_counts : dict
            Pattern name to number of near-matches (informational).

        coverage : float
            Fraction of host edges lying in at least one full occurrence.

        matches : dict
            Pattern name to list of MotifMatch.

        overlapping_counts : dict, optional
            Pattern name to number of occurrences dropped for sharing an edge
            with a kept one.
        """
        self.counts = counts
        self.near_match_counts = near_match_counts
        self.coverage = coverage
        self.matches = matches
        self.overlapping_counts = overlapping_counts if overlapping_counts is not None else {}

    def __str__(self):
        return "MotifInventory(%s, coverage=%.3f)" % (
            ", ".join("%s=%d" % kv for kv in sorted(self.counts.items())),
            self.coverage,
        )

    def to_lines(self, prefix="motifs"):
        lines = []
        for name in sorted(self.counts):
            lines.append("%s.%s: %d" % (prefix, name, self.counts[name]))
        for name in sorted(self.near_match_counts):
            lines.append(
                "%s.near.%s: %d" % (prefix, name, self.near_match_counts[name])
            )
        for name in sorted(self.overlapping_counts):
            if self.overlapping_counts[name]:
                lines.append(
                    "%s.overlapping.%s: %d" % (prefix, name, self.overlapping_counts[name])
                )
        lines.append("%s.coverage: %.6f" % (prefix, self.coverage))
        for name in sorted(self.matches):
            for match in self.matches[name]:
                lines.append(
                    "%s.match.%s: %s"
                    % (prefix, name, " ".join(str(v) for v in match.vertex_map))
                )
        return lines


def motif_inventory(host, tol=DEFAULT_TOLERANCES, patterns=None):
    """
    Counts of edge-disjoint occurrences of every pattern in `host` and the
    share of host edges they cover. Each pattern is resolved on its own, so
    the kites of a double kite still count as kites. Defaults to the bundled
    building blocks.
    """
    if patterns is None:
        from .catalog import bundled_patterns

        patterns = bundled_patterns(tol)
    counts = {}
    near_match_counts = {}
    overlapping_counts = {}
    matches = {}
    covered = set()
    for pattern in patterns:
        full, near = _search(host, pattern, tol)
        candidates = _ordered(full)
        found = edge_disjoint(candidates, pattern)
        overlapping_counts[pattern.name] = len(candidates) - len(found)
        inside = [set(key) for key in full]
        near_match_counts[pattern.name] = sum(
            1 for key in near if not any(set(key) <= vertices for vertices in inside)
        )
        counts[pattern.name] = len(found)
        matches[pattern.name] = found
        for match in found:
            covered.update(match.host_edges(pattern))
    inventory = MotifInventory(
        counts=counts,
        near_match_counts=near_match_counts,
        coverage=len(covered) / float(host.n_edges),
        matches=matches,
        overlapping_counts=overlapping_counts,
    )
    logger.info("Motif inventory of %s: %s", host, inventory)
    return inventory
