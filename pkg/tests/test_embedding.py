import numpy as np
from pytest import raises

from pymatchstick.catalog import ingest_entry
from pymatchstick.embedding import (
    DegreeProfile,
    Embedding,
    EmbeddingReadError,
    ProfileViolation,
    count_components,
    degree_profile,
    read_embedding,
    read_embedding_file,
    write_embedding,
    write_embedding_file,
)

from .common import eq_, ok_, run_catalog_entries
from .data import hexagon_wheel, unit_square, unit_triangle


@run_catalog_entries
def test_handshake(entry_id):
    embedding = ingest_entry(entry_id)
    eq_(sum(embedding.degrees), 2 * embedding.n_edges)


def test_edges_are_normalized_and_sorted():
    embedding = Embedding([(0, 0), (1, 0), (0.5, 0.8)], [(2, 0), (1, 0), (2, 1)])
    eq_(embedding.edges, ((0, 1), (0, 2), (1, 2)))


def test_edge_tags_follow_edges():
    embedding = Embedding([(0, 0), (1, 0), (0.5, 0.8)], [(2, 1), (0, 1)], edge_tags=["red", None])
    eq_(embedding.edge_tags, (None, "red"))
    eq_(embedding.edges_with_tag("red"), [(1, 2)])


def test_loop_rejected():
    with raises(ValueError):
        Embedding([(0, 0), (1, 0)], [(0, 0), (0, 1)])


def test_duplicate_edge_rejected():
    with raises(ValueError):
        Embedding([(0, 0), (1, 0)], [(0, 1), (1, 0)])


def test_out_of_range_edge_rejected():
    with raises(ValueError):
        Embedding([(0, 0), (1, 0)], [(0, 2)])


def test_isolated_vertex_rejected():
    with raises(ValueError):
        Embedding([(0, 0), (1, 0), (5, 5)], [(0, 1)])


def test_adjacency_and_degrees():
    eq_(hexagon_wheel.degrees[0], 6)
    eq_(sorted(hexagon_wheel.adjacency[0]), [1, 2, 3, 4, 5, 6])
    ok_(hexagon_wheel.has_edge(3, 0))
    ok_(not hexagon_wheel.has_edge(1, 3))
    eq_(len(hexagon_wheel.incident_edges(1)), 3)


def test_count_components():
    eq_(count_components(4, [(0, 1), (2, 3)]), 2)
    eq_(count_components(3, [(0, 1)]), 2)
    ok_(unit_square.is_connected)


def test_degree_profile_of_wheel():
    profile = degree_profile(hexagon_wheel, 3, 6)
    eq_(profile, DegreeProfile(m=3, n=6, count_m=6, count_n=1))


def test_degree_profile_violation_lists_vertices():
    with raises(ProfileViolation) as info:
        degree_profile(hexagon_wheel, 2, 4)
    eq_(info.value.vertices, list(range(7)))


def test_regular_profile_counts_everything_under_m():
    profile = degree_profile(unit_square, 2, 2)
    eq_((profile.count_m, profile.count_n), (4, 0))


def test_transformed_keeps_lengths():
    moved = hexagon_wheel.transformed(
        rotation_degrees=33.0, translation=(4.0, -2.0), reflect=True
    )
    ok_(np.allclose(moved.edge_lengths, hexagon_wheel.edge_lengths, atol=1e-12))
    eq_(moved.edges, hexagon_wheel.edges)


def test_transformed_scale():
    doubled = unit_triangle.transformed(scale=2.0)
    ok_(np.allclose(doubled.edge_lengths, 2.0))


def test_relabeled():
    permutation = [6, 5, 4, 3, 2, 1, 0]
    relabeled = hexagon_wheel.relabeled(permutation)
    eq_(relabeled.degrees[6], 6)
    eq_(relabeled.vertices[6], hexagon_wheel.vertices[0])
    ok_(relabeled.has_edge(6, 5))


def test_relabeled_rejects_non_permutation():
    with raises(ValueError):
        unit_triangle.relabeled([0, 0, 1])


def test_without_edge():
    reduced = hexagon_wheel.without_edge((1, 0))
    eq_(reduced.n_edges, 11)
    ok_(not reduced.has_edge(0, 1))
    with raises(ValueError):
        reduced.without_edge((0, 1))


def test_mge_round_trip_is_byte_identical():
    text = write_embedding(hexagon_wheel)
    eq_(write_embedding(read_embedding(text)), text)
    eq_(read_embedding(text), hexagon_wheel)


def test_mge_round_trip_keeps_tags():
    embedding = ingest_entry("fig13")
    eq_(read_embedding(write_embedding(embedding)), embedding)


def test_mge_file_round_trip(tmp_path):
    path = str(tmp_path / "wheel.mge")
    write_embedding_file(hexagon_wheel, path)
    eq_(read_embedding_file(path), hexagon_wheel)


def test_mge_name_from_file_name(tmp_path):
    path = tmp_path / "nameless.mge"
    path.write_text("v 0 0 0\nv 1 1 0\ne 0 1\n")
    eq_(read_embedding_file(str(path)).name, "nameless")


def test_mge_comments_ignored():
    embedding = read_embedding("# header\nname t\nv 0 0 0\nv 1 1 0  # right\ne 0 1\n")
    eq_(embedding.n_edges, 1)
    eq_(embedding.name, "t")


def test_mge_name_with_hash_survives_round_trip():
    embedding = Embedding(unit_triangle.vertices, unit_triangle.edges, name="drawing #3")
    text = write_embedding(embedding)
    eq_(read_embedding(text).name, "drawing #3")
    eq_(write_embedding(read_embedding(text)), text)


def test_mge_multiline_name_rejected():
    embedding = Embedding(unit_triangle.vertices, unit_triangle.edges, name="a\nv 9 0 0")
    with raises(ValueError):
        write_embedding(embedding)


def test_mge_unknown_record():
    with raises(EmbeddingReadError):
        read_embedding("v 0 0 0\nv 1 1 0\nx 0 1\n")


def test_mge_unknown_vertex():
    with raises(EmbeddingReadError):
        read_embedding("v 0 0 0\nv 1 1 0\ne 0 7\n")


def test_mge_out_of_order_vertex_ids():
    with raises(EmbeddingReadError):
        read_embedding("v 1 0 0\nv 0 1 0\ne 0 1\n")


def test_mge_rejects_other_units():
    with raises(EmbeddingReadError):
        read_embedding("unit 2.0\nv 0 0 0\nv 1 1 0\ne 0 1\n")


def test_json_round_trip():
    eq_(Embedding.from_json(hexagon_wheel.to_json()), hexagon_wheel)
