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
Infinitesimal rigidity of bar-joint frameworks: numeric rank of the
rigidity matrix, non-trivial flexes, single edge removals and the (2,3)
pebble game as a combinatorial cross-check for generic positions.
"""

import logging

import numpy as np
from scipy.linalg import qr, svd
from serializable import Serializable

from .embedding import count_components, normalize_edge
from .tolerance_policy import DEFAULT_TOLERANCES

logger = logging.getLogger(__name__)

MIN_EDGE_LENGTH = 1e-12


class DegenerateEdgeError(ValueError):
    pass


class DisconnectedEmbeddingError(ValueError):
    pass


class RigidityResult(Serializable):
    """
    Outcome of the rank test. A framework reported rigid is infinitesimally
    rigid; a flexible one has a first-order flex, which need not extend to
    a finite motion.
    """

    def __init__(
        self,
        rank,
        dof,
        rigid,
        singular_values,
        flex_basis,
        n_vertices,
        n_edges,
    ):
        self.rank = rank
        self.dof = dof
        self.rigid = rigid
        self.singular_values = singular_values
        self.flex_basis = flex_basis
        self.n_vertices = n_vertices
        self.n_edges = n_edges

    @property
    def isostatic(self):
        return self.rigid and self.n_edges == 2 * self.n_vertices - 3

    @property
    def label(self):
        if self.rigid:
            return "rigid (infinitesimally)"
        return "flexible (infinitesimal flex found)"

    def __str__(self):
        return "RigidityResult(rank=%d, dof=%d, rigid=%s)" % (
            self.rank,
            self.dof,
            self.rigid,
        )

    def to_lines(self, prefix="rigidity"):
        smallest = self.singular_values[-1] if self.singular_values else 0.0
        return [
            "%s.rank: %d" % (prefix, self.rank),
            "%s.dof: %d" % (prefix, self.dof),
            "%s.rigid: %s" % (prefix, self.rigid),
            "%s.isostatic: %s" % (prefix, self.isostatic),
            "%s.label: %s" % (prefix, self.label),
            "%s.smallest_singular_value: %.3e" % (prefix, smallest),
        ]


class EdgeRemoval(Serializable):
    def __init__(self, edge, dof_after, disconnected):
        self.edge = edge
        self.dof_after = dof_after
        self.disconnected = disconnected

    def __str__(self):
        return "EdgeRemoval(edge=%s, dof_after=%d, disconnected=%s)" % (
            self.edge,
            self.dof_after,
            self.disconnected,
        )

    def __eq__(self, other):
        return (
            other.__class__ is EdgeRemoval
            and tuple(self.edge) == tuple(other.edge)
            and self.dof_after == other.dof_after
            and self.disconnected == other.disconnected
        )

    def __hash__(self):
        return hash((tuple(self.edge), self.dof_after, self.disconnected))


def rigidity_matrix(embedding):
    """
    (E, 2V) matrix with row (p_i - p_j) in the columns of vertex i and
    (p_j - p_i) in the columns of vertex j for every edge (i, j).
    """
    coordinates = embedding.coordinates
    edges = embedding.edge_array
    diff = coordinates[edges[:, 0]] - coordinates[edges[:, 1]]
    lengths = np.linalg.norm(diff, axis=1)
    short = np.flatnonzero(lengths < MIN_EDGE_LENGTH)
    if len(short):
        raise DegenerateEdgeError(
            "Edge %s of %s has length %g" % (embedding.edges[short[0]], embedding, lengths[short[0]])
        )
    matrix = np.zeros((len(edges), 2 * embedding.n_vertices))
    rows = np.arange(len(edges))
    for axis in (0, 1):
        matrix[rows, 2 * edges[:, 0] + axis] = diff[:, axis]
        matrix[rows, 2 * edges[:, 1] + axis] = -diff[:, axis]
    return matrix


def numeric_rank(singular_values, rank_tol):
    """
    Number of singular values above `rank_tol` times the largest. Expects
    them in decreasing order, as svd returns them.
    """
    singular_values = np.asarray(singular_values, dtype=float)
    if len(singular_values) == 0 or singular_values[0] == 0:
        return 0
    return int(np.sum(singular_values > rank_tol * singular_values[0]))


def trivial_motions(embedding):
    """
    Orthonormal (2V, 3) basis of the infinitesimal translations and the
    rotation about the vertex centroid.
    """
    n_vertices = embedding.n_vertices
    centered = embedding.coordinates - embedding.coordinates.mean(axis=0)
    motions = np.zeros((2 * n_vertices, 3))
    motions[0::2, 0] = 1.0
    motions[1::2, 1] = 1.0
    motions[0::2, 2] = -centered[:, 1]
    motions[1::2, 2] = centered[:, 0]
    q, _ = qr(motions, mode="economic")
    return q


def _flex_basis(embedding, null_space, dof):
    if dof == 0:
        return []
    trivial = trivial_motions(embedding)
    projected = null_space - trivial.dot(trivial.T.dot(null_space))
    u, _, _ = svd(projected, full_matrices=False)
    return [
        [tuple(float(c) for c in pair) for pair in u[:, k].reshape(-1, 2)]
        for k in range(dof)
    ]


def analyze(embedding, tol=DEFAULT_TOLERANCES):
    """
    Decide infinitesimal rigidity from the rank of the rigidity matrix.

    Parameters
    ----------
    embedding : Embedding
        Connected, with at least 3 vertices.

    tol : TolerancePolicy
        Singular values at or below tol.rank_tol times the largest count
        as zero.

    Returns
    -------
    RigidityResult, with one velocity assignment per internal degree of
    freedom in flex_basis.
    """
    if embedding.n_vertices < 3:
        raise ValueError("Rigidity analysis needs at least 3 vertices, got %s" % embedding)
    if not embedding.is_connected:
        raise DisconnectedEmbeddingError(
            "%s is disconnected, rank does not measure its rigidity" % embedding
        )
    matrix = rigidity_matrix(embedding)
    _, singular_values, vt = svd(matrix, full_matrices=True)
    rank = numeric_rank(singular_values, tol.rank_tol)
    dof = max(0, 2 * embedding.n_vertices - 3 - rank)
    flex_basis = _flex_basis(embedding, vt[rank:].T, dof)
    result = RigidityResult(
        rank=rank,
        dof=dof,
        rigid=(dof == 0),
        singular_values=[float(s) for s in singular_values],
        flex_basis=flex_basis,
        n_vertices=embedding.n_vertices,
        n_edges=embedding.n_edges,
    )
    logger.info("Rigidity of %s: %s", embedding, result)
    return result


def edge_removal_scan(embedding, tol=DEFAULT_TOLERANCES):
    """
    Degrees of freedom left after deleting each edge on its own, in edge
    order. Removals which disconnect the graph (including ones that leave a
    vertex without edges) are flagged.
    """
    analyze(embedding, tol)
    matrix = rigidity_matrix(embedding)
    n_vertices = embedding.n_vertices
    removals = []
    for index, edge in enumerate(embedding.edges):
        reduced = np.delete(matrix, index, axis=0)
        singular_values = svd(reduced, compute_uv=False)
        rank = numeric_rank(singular_values, tol.rank_tol)
        remaining = embedding.edges[:index] + embedding.edges[index + 1:]
        disconnected = count_components(n_vertices, remaining) > 1
        removals.append(
            EdgeRemoval(
                edge=edge,
                dof_after=max(0, 2 * n_vertices - 3 - rank),
                disconnected=disconnected,
            )
        )
    logger.info(
        "%s: %d of %d single edge removals leave it flexible",
        embedding,
        len(flexible_after_removal(removals)),
        len(removals),
    )
    return removals


def flexible_after_removal(scan):
    return [r.edge for r in scan if r.dof_after >= 1]


def redundant_edges(scan):
    """
    Edges whose removal keeps the framework rigid.
    """
    return [r.edge for r in scan if r.dof_after == 0 and not r.disconnected]


def _gather_pebble(root, pebbles, out_edges, blocked):
    """
    Depth-first search along directed edges from root for a free pebble
    outside `blocked`, reversing the path so the pebble moves to root.
    """
    parent = {root: None}
    stack = [root]
    while stack:
        x = stack.pop()
        for y in out_edges[x]:
            if y in parent or y in blocked:
                continue
            parent[y] = x
            if pebbles[y] > 0:
                pebbles[y] -= 1
                pebbles[root] += 1
                child = y
                while parent[child] is not None:
                    p = parent[child]
                    out_edges[p].remove(child)
                    out_edges[child].append(p)
                    child = p
                return True
            stack.append(y)
    return False


def independent_edge_count(n_vertices, edges):
    """
    Size of a maximal (2,3)-sparse subset of edges, found with the pebble
    game.
    """
    pebbles = [2] * n_vertices
    out_edges = [[] for _ in range(n_vertices)]
    independent = 0
    for edge in edges:
        u, v = normalize_edge(*edge)
        blocked = {u, v}
        while pebbles[u] + pebbles[v] < 4:
            if pebbles[u] < 2 and _gather_pebble(u, pebbles, out_edges, blocked):
                continue
            if pebbles[v] < 2 and _gather_pebble(v, pebbles, out_edges, blocked):
                continue
            break
        if pebbles[u] + pebbles[v] == 4:
            pebbles[u] -= 1
            out_edges[u].append(v)
            independent += 1
    return independent


def combinatorial_dof(embedding):
    """
    Degrees of freedom of the graph in generic position:
    2V - 3 minus the number of independent edges.
    """
    independent = independent_edge_count(embedding.n_vertices, embedding.edges)
    return max(0, 2 * embedding.n_vertices - 3 - independent)
