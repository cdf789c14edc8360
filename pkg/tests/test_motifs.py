from pymatchstick.catalog import (
    DOUBLE_KITE,
    KITE,
    REVERSE_DOUBLE_KITE,
    TRIPLET_KITE,
    bundled_patterns,
    refined_entry,
)
from pymatchstick.motifs import (
    Pattern,
    find_motifs,
    find_near_motifs,
    motif_inventory,
)

from .common import eq_, ok_, gt_, lte_, run_catalog_entries
from .data import hexagon_wheel, triangle_strip, unit_rhombus, unit_triangle


def _pattern(name):
    return {pattern.name: pattern for pattern in bundled_patterns()}[name]


def test_four_bundled_patterns():
    eq_(
        sorted(pattern.name for pattern in bundled_patterns()),
        sorted([KITE, TRIPLET_KITE, DOUBLE_KITE, REVERSE_DOUBLE_KITE]),
    )


def test_kite_pattern_shape():
    kite = _pattern(KITE)
    eq_(kite.embedding.n_vertices, 12)
    eq_(kite.embedding.n_edges, 21)
    # identity and one mirror
    eq_(kite.automorphism_count, 2)


def test_each_pattern_matches_itself_once():
    for pattern in bundled_patterns():
        matches = find_motifs(pattern.embedding, pattern)
        eq_(len(matches), 1, pattern.name)
        lte_(matches[0].rms_error, 1e-9)
        eq_(matches[0].missing, 0)


def test_self_match_covers_every_edge():
    kite = _pattern(KITE)
    inventory = motif_inventory(kite.embedding, patterns=[kite])
    eq_(inventory.counts, {KITE: 1})
    eq_(inventory.coverage, 1.0)


def test_no_kites_in_small_graphs():
    for host in (unit_triangle, hexagon_wheel):
        eq_(find_motifs(host, _pattern(KITE)), [])


def test_fig2a_has_six_kites():
    eq_(len(find_motifs(refined_entry("fig2a").embedding, _pattern(KITE))), 6)


def test_fig2a_kites_are_distinct():
    matches = find_motifs(refined_entry("fig2a").embedding, _pattern(KITE))
    eq_(len(set(match.host_vertices for match in matches)), 6)


@run_catalog_entries("fig5", "fig6", "fig7")
def test_two_triplet_kites(entry_id):
    eq_(len(find_motifs(refined_entry(entry_id).embedding, _pattern(TRIPLET_KITE))), 2)


def test_fig9_has_two_double_kites():
    eq_(len(find_motifs(refined_entry("fig9").embedding, _pattern(DOUBLE_KITE))), 2)


def test_fig9_inventory_drops_overlapping_double_kite():
    inventory = motif_inventory(refined_entry("fig9").embedding)
    eq_(inventory.counts[DOUBLE_KITE], 2)
    eq_(inventory.overlapping_counts[DOUBLE_KITE], 1)
    ok_("motifs.overlapping.double-kite: 1" in inventory.to_lines())


def test_overlapping_occurrences_share_no_edge():
    # a strip of three triangles holds two rhombi sharing the middle triangle
    rhombus = Pattern.from_embedding("rhombus", unit_rhombus)
    host = triangle_strip(5)
    matches = find_motifs(host, rhombus)
    eq_(len(matches), 1)
    eq_(matches[0].host_vertices, (0, 1, 2, 3))
    inventory = motif_inventory(host, patterns=[rhombus])
    eq_(inventory.counts, {"rhombus": 1})
    eq_(inventory.overlapping_counts, {"rhombus": 1})


def test_edge_disjoint_occurrences_all_kept():
    rhombus = Pattern.from_embedding("rhombus", unit_rhombus)
    matches = find_motifs(triangle_strip(7), rhombus)
    eq_([match.host_vertices for match in matches], [(0, 1, 2, 3), (3, 4, 5, 6)])


def test_double_kite_holds_two_kites():
    inventory = motif_inventory(refined_entry("fig1c").embedding)
    eq_(inventory.counts[DOUBLE_KITE], 1)
    eq_(inventory.counts[KITE], 2)


def test_matching_invariant_under_rigid_motion():
    host = refined_entry("fig2a").embedding
    moved = host.transformed(rotation_degrees=47.0, translation=(10.0, -3.0), reflect=True)
    eq_(len(find_motifs(moved, _pattern(KITE))), 6)


def test_near_matches_exclude_full_ones():
    kite = _pattern(KITE)
    reduced = kite.embedding.without_edge(kite.embedding.edges[-1])
    eq_(find_motifs(reduced, kite), [])
    near = find_near_motifs(kite.embedding, kite)
    eq_(near, [])


def test_host_edges_of_match():
    kite = _pattern(KITE)
    match = find_motifs(kite.embedding, kite)[0]
    eq_(sorted(match.host_edges(kite)), sorted(kite.embedding.edges))


def test_inventory_lines():
    inventory = motif_inventory(refined_entry("fig2a").embedding)
    lines = inventory.to_lines()
    ok_("motifs.kite: 6" in lines)
    gt_(inventory.coverage, 0.0)


def test_pattern_from_embedding():
    pattern = Pattern.from_embedding("wheel", hexagon_wheel)
    eq_(pattern.automorphism_count, 12)
