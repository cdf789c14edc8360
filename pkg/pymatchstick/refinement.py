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
Damped Gauss-Newton refinement of vertex coordinates so that every edge
has length one. The constraint residual of edge (i, j) is
|p_i - p_j|^2 - 1; vertex 0 is pinned and its first neighbor may only slide
along the edge between them, which removes the three rigid motions of the
plane from the search.
"""

import logging

import numpy as np
from scipy.linalg import svd
from serializable import Serializable
from typechecks import require_integer

from .tolerance_policy import DEFAULT_TOLERANCES

logger = logging.getLogger(__name__)

INITIAL_DAMPING = 1e-8
DAMPING_FACTOR = 10.0
MAX_FAILED_RETRIES = 10
MIN_STEP_NORM = 1e-14


class RefinementInputError(ValueError):
    pass


class RefinementDivergence(ValueError):
    def __init__(self, message, coordinates, residual_value):
        self.coordinates = coordinates
        self.residual_value = residual_value
        ValueError.__init__(self, message)


class RefineResult(Serializable):
    def __init__(
        self,
        embedding,
        iterations,
        initial_residual,
        final_residual,
        converged,
        displacement,
    ):
        self.embedding = embedding
        self.iterations = iterations
        self.initial_residual = initial_residual
        self.final_residual = final_residual
        self.converged = converged
        self.displacement = displacement

    def __str__(self):
        return (
            "RefineResult(embedding=%s, iterations=%d, final_residual=%.3e, "
            "converged=%s, displacement=%.3e)"
        ) % (
            self.embedding,
            self.iterations,
            self.final_residual,
            self.converged,
            self.displacement,
        )

    def to_lines(self, prefix="refine"):
        return [
            "%s.converged: %s" % (prefix, self.converged),
            "%s.iterations: %d" % (prefix, self.iterations),
            "%s.initial_residual: %.3e" % (prefix, self.initial_residual),
            "%s.final_residual: %.3e" % (prefix, self.final_residual),
            "%s.displacement: %.3e" % (prefix, self.displacement),
        ]


def constraint_residuals(coordinates, edges):
    """
    Squared edge length minus one for every edge.
    """
    diff = coordinates[edges[:, 0]] - coordinates[edges[:, 1]]
    return np.einsum("ij,ij->i", diff, diff) - 1.0


def constraint_jacobian(coordinates, edges):
    """
    (E, 2V) derivative of constraint_residuals with respect to the
    flattened coordinates (x0, y0, x1, y1, ...).
    """
    n_edges = len(edges)
    jacobian = np.zeros((n_edges, 2 * len(coordinates)))
    diff = 2.0 * (coordinates[edges[:, 0]] - coordinates[edges[:, 1]])
    rows = np.arange(n_edges)
    jacobian[rows, 2 * edges[:, 0]] = diff[:, 0]
    jacobian[rows, 2 * edges[:, 0] + 1] = diff[:, 1]
    jacobian[rows, 2 * edges[:, 1]] = -diff[:, 0]
    jacobian[rows, 2 * edges[:, 1] + 1] = -diff[:, 1]
    return jacobian


def _max_length_deviation(coordinates, edges):
    diff = coordinates[edges[:, 0]] - coordinates[edges[:, 1]]
    return float(np.max(np.abs(np.linalg.norm(diff, axis=1) - 1.0)))


def residual(embedding):
    """
    Largest |length - 1| over the edges of an embedding.
    """
    return _max_length_deviation(embedding.coordinates, embedding.edge_array)


def gauge_basis(embedding):
    """
    (2V, 2V - 3) matrix whose columns span the coordinate changes allowed
    once vertex 0 is pinned and its first neighbor can only move along the
    edge joining them.
    """
    n_vertices = embedding.n_vertices
    anchor = embedding.adjacency[0][0]
    direction = embedding.coordinates[anchor] - embedding.coordinates[0]
    direction = direction / np.linalg.norm(direction)
    columns = []
    for vertex in range(1, n_vertices):
        if vertex == anchor:
            column = np.zeros(2 * n_vertices)
            column[2 * vertex: 2 * vertex + 2] = direction
            columns.append(column)
        else:
            for axis in (0, 1):
                column = np.zeros(2 * n_vertices)
                column[2 * vertex + axis] = 1.0
                columns.append(column)
    return np.array(columns).T


def _damped_step(reduced_jacobian, residuals, damping):
    u, s, vt = svd(reduced_jacobian, full_matrices=False)
    scale = s / (s ** 2 + damping)
    return -vt.T.dot(scale * u.T.dot(residuals))


def refine(embedding, tol=DEFAULT_TOLERANCES, max_iter=200):
    """
    Move vertices the least amount needed to make every edge length one.

    Parameters
    ----------
    embedding : Embedding
        Edge lengths must already be within tol.unit_tol_raw of one.

    tol : TolerancePolicy

    max_iter : int
        Maximum number of accepted steps.

    Returns
    -------
    RefineResult, with converged=False when max_iter is exhausted or the
    step size collapses before the lengths are within tol.unit_tol_refined.
    """
    require_integer(max_iter, "max_iter")
    edges = embedding.edge_array
    start = np.array(embedding.coordinates)
    initial_residual = _max_length_deviation(start, edges)
    if initial_residual > tol.unit_tol_raw:
        raise RefinementInputError(
            "Edge lengths of %s deviate from 1 by %.3g, more than unit_tol_raw=%g"
            % (embedding, initial_residual, tol.unit_tol_raw)
        )
    basis = gauge_basis(embedding)
    coordinates = start.copy()
    residuals = constraint_residuals(coordinates, edges)
    cost = residuals.dot(residuals)
    damping = INITIAL_DAMPING
    iterations = 0
    current = initial_residual
    while current > tol.unit_tol_refined and iterations < max_iter:
        reduced_jacobian = constraint_jacobian(coordinates, edges).dot(basis)
        failed = 0
        while True:
            step = basis.dot(_damped_step(reduced_jacobian, residuals, damping))
            trial = coordinates + step.reshape(-1, 2)
            trial_residuals = constraint_residuals(trial, edges)
            trial_cost = trial_residuals.dot(trial_residuals)
            if trial_cost < cost:
                damping = max(damping / DAMPING_FACTOR, np.finfo(float).tiny)
                break
            failed += 1
            damping *= DAMPING_FACTOR
            if failed >= MAX_FAILED_RETRIES:
                logger.error(
                    "Refinement of %s diverged at iteration %d, coordinates:\n%s",
                    embedding,
                    iterations,
                    coordinates,
                )
                raise RefinementDivergence(
                    "Refinement of %s stopped decreasing the residual %.3e after %d "
                    "damped retries" % (embedding, current, MAX_FAILED_RETRIES),
                    coordinates=coordinates.tolist(),
                    residual_value=current,
                )
        coordinates = trial
        residuals = trial_residuals
        cost = trial_cost
        iterations += 1
        current = _max_length_deviation(coordinates, edges)
        step_norm = float(np.linalg.norm(step))
        logger.debug(
            "%s iteration %d: residual=%.3e step=%.3e damping=%.1e",
            embedding.name,
            iterations,
            current,
            step_norm,
            damping,
        )
        if step_norm <= MIN_STEP_NORM:
            break

    converged = current <= tol.unit_tol_refined
    displacement = float(np.max(np.linalg.norm(coordinates - start, axis=1)))
    if converged:
        logger.info(
            "Refined %s in %d iterations, residual %.3e, displacement %.3e",
            embedding,
            iterations,
            current,
            displacement,
        )
    else:
        logger.warning(
            "Refinement of %s did not converge in %d iterations, residual %.3e",
            embedding,
            iterations,
            current,
        )
    refined = embedding if iterations == 0 else embedding.with_coordinates(coordinates)
    return RefineResult(
        embedding=refined,
        iterations=iterations,
        initial_residual=initial_residual,
        final_residual=current,
        converged=converged,
        displacement=displacement,
    )
