import numpy as np
from pytest import raises
from scipy.linalg import svd

from pymatchstick import Embedding
from pymatchstick.catalog import refined_entry
from pymatchstick.rigidity import (
    DegenerateEdgeError,
    DisconnectedEmbeddingError,
    analyze,
    combinatorial_dof,
    edge_removal_scan,
    flexible_after_removal,
    independent_edge_count,
    numeric_rank,
    redundant_edges,
    rigidity_matrix,
    trivial_motions,
)

from .common import eq_, ok_, gte_, run_catalog_entries, graph_entry_ids
from .data import hexagon_cycle, hexagon_wheel, triangle_strip, unit_square, unit_triangle


def test_triangle_is_isostatic():
    result = analyze(unit_triangle)
    eq_(result.rank, 3)
    eq_(result.dof, 0)
    ok_(result.rigid)
    ok_(result.isostatic)
    eq_(result.flex_basis, [])


def test_square_has_one_flex():
    result = analyze(unit_square)
    eq_(result.dof, 1)
    ok_(not result.rigid)
    eq_(len(result.flex_basis), 1)
    flex = np.array(result.flex_basis[0]).ravel()
    ok_(np.allclose(rigidity_matrix(unit_square).dot(flex), 0.0, atol=1e-10))
    ok_(np.allclose(trivial_motions(unit_square).T.dot(flex), 0.0, atol=1e-10))


def test_hexagon_cycle_dof():
    eq_(analyze(hexagon_cycle).dof, 3)
    eq_(combinatorial_dof(hexagon_cycle), 3)


def test_wheel_is_rigid_with_redundant_edges():
    result = analyze(hexagon_wheel)
    ok_(result.rigid)
    ok_(not result.isostatic)
    scan = edge_removal_scan(hexagon_wheel)
    eq_(len(redundant_edges(scan)), 12)
    eq_(flexible_after_removal(scan), [])


def test_triangle_strip_removals():
    strip = triangle_strip(8)
    ok_(analyze(strip).isostatic)
    scan = edge_removal_scan(strip)
    eq_(len(flexible_after_removal(scan)), strip.n_edges)
    eq_(redundant_edges(scan), [])
    # removing an end edge leaves a dangling vertex, never a disconnection here
    ok_(not any(r.disconnected for r in scan))


def test_removal_flags_disconnection():
    pendant = Embedding(
        vertices=[(0.0, 0.0), (1.0, 0.0), (0.5, 0.8660254037844386), (2.0, 0.0)],
        edges=[(0, 1), (1, 2), (0, 2), (1, 3)],
    )
    scan = edge_removal_scan(pendant)
    disconnected = [r.edge for r in scan if r.disconnected]
    eq_(disconnected, [(1, 3)])


def test_degenerate_edge():
    embedding = Embedding(
        vertices=[(0.0, 0.0), (0.0, 0.0), (1.0, 0.0)],
        edges=[(0, 1), (1, 2), (0, 2)],
    )
    with raises(DegenerateEdgeError):
        analyze(embedding)


def test_disconnected():
    embedding = Embedding(
        vertices=[(0.0, 0.0), (1.0, 0.0), (0.0, 2.0), (1.0, 2.0)],
        edges=[(0, 1), (2, 3)],
    )
    with raises(DisconnectedEmbeddingError):
        analyze(embedding)


def test_too_few_vertices():
    with raises(ValueError):
        analyze(Embedding([(0, 0), (1, 0)], [(0, 1)]))


def test_numeric_rank():
    eq_(numeric_rank([2.0, 1.0, 1e-9], 1e-8), 2)
    eq_(numeric_rank([], 1e-8), 0)
    eq_(numeric_rank((0.0, 0.0), 1e-8), 0)
    eq_(numeric_rank((3.0, 2.9, 1e-3), 1e-2), 2)


def test_rigid_motion_invariance():
    embedding = refined_entry("fig1a").embedding
    moved = embedding.transformed(rotation_degrees=71.0, translation=(3.0, 5.0), reflect=True)
    first, second = analyze(embedding), analyze(moved)
    eq_(first.rank, second.rank)
    ok_(np.allclose(first.singular_values, second.singular_values, atol=1e-10))


def _random_framework(rng, n_vertices, n_extra):
    coordinates = rng.uniform(0, 1, size=(n_vertices, 2))
    edges = {(k, k + 1) for k in range(n_vertices - 1)}
    while len(edges) < n_vertices - 1 + n_extra:
        i, j = sorted(rng.choice(n_vertices, size=2, replace=False))
        edges.add((int(i), int(j)))
    return Embedding(vertices=coordinates, edges=sorted(edges))


def _rank(matrix):
    return numeric_rank(svd(matrix, compute_uv=False), 1e-8)


def test_rank_is_monotone_and_matches_pebble_game():
    rng = np.random.RandomState(7)
    for _ in range(100):
        n_vertices = rng.randint(4, 9)
        max_extra = n_vertices * (n_vertices - 1) // 2 - (n_vertices - 1)
        framework = _random_framework(rng, n_vertices, rng.randint(0, max_extra + 1))
        matrix = rigidity_matrix(framework)
        rank = _rank(matrix)
        eq_(rank, independent_edge_count(n_vertices, framework.edges))
        for row in range(len(matrix)):
            ok_(_rank(np.delete(matrix, row, axis=0)) <= rank)
            ok_(_rank(np.delete(matrix, row, axis=0)) >= rank - 1)


def test_pebble_game_counts():
    eq_(independent_edge_count(3, [(0, 1), (1, 2), (0, 2)]), 3)
    # K4 has one edge too many
    k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    eq_(independent_edge_count(4, k4), 5)
    # two triangles joined at one vertex
    bowtie = [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]
    eq_(independent_edge_count(5, bowtie), 6)


@run_catalog_entries(*graph_entry_ids)
def test_catalog_graphs_are_rigid(entry_id):
    embedding = refined_entry(entry_id).embedding
    eq_(analyze(embedding).dof, 0)
    eq_(combinatorial_dof(embedding), 0)


@run_catalog_entries("fig1a", "fig1b", "fig13")
def test_isostatic_catalog_graphs(entry_id):
    ok_(analyze(refined_entry(entry_id).embedding).isostatic)


def test_fig13_every_removal_is_flexible():
    embedding = refined_entry("fig13").embedding
    scan = edge_removal_scan(embedding)
    eq_(len(scan), embedding.n_edges)
    for removal in scan:
        gte_(removal.dof_after, 1)


def test_fig1c_has_redundant_edge():
    scan = edge_removal_scan(refined_entry("fig1c").embedding)
    ok_(len(redundant_edges(scan)) >= 1)
