import shutil

from pytest import raises

from pymatchstick.catalog import (
    CATALOG_DIR_ENV_KEY,
    DETAIL,
    MATCHSTICK,
    OUTLINE,
    SMALLEST_KNOWN_EDGES,
    STUB,
    CatalogEntry,
    StubEntryError,
    UnknownCatalogEntry,
    catalog_directory,
    catalog_entries,
    catalog_entry,
    load_segment_list,
    outline_cycle_length,
    segment_path,
)

from .common import eq_, ok_, stub_entry_ids


def test_catalog_order():
    ids = [entry.entry_id for entry in catalog_entries()]
    eq_(ids[:4], ["fig1a", "fig1b", "fig1c", "fig1d"])
    eq_(ids[-1], "fig13")
    eq_(len(ids), 18)


def test_unknown_entry():
    with raises(UnknownCatalogEntry):
        catalog_entry("fig99")


def test_duplicate_registration():
    with raises(ValueError):
        CatalogEntry.register("fig1a", STUB)


def test_unknown_kind():
    with raises(ValueError):
        CatalogEntry("figX", "painting")


def test_stub_captions():
    counts = {}
    for entry_id in stub_entry_ids:
        entry = catalog_entry(entry_id)
        counts[entry_id] = (entry.caption_vertices, entry.caption_edges)
    eq_(counts, {"fig10": (136, 277), "fig11": (114, 231), "fig12": (382, 771)})


def test_stub_has_no_data():
    with raises(StubEntryError) as info:
        segment_path("fig11")
    ok_("No data in paper source" in str(info.value))
    eq_(info.value.entry, catalog_entry("fig11"))


def test_stub_profiles():
    eq_([catalog_entry(e).profile for e in stub_entry_ids], [(4, 9), (4, 10), (4, 11)])


def test_kinds():
    eq_(catalog_entry("fig3b-outline").kind, OUTLINE)
    eq_(catalog_entry("fig13").kind, DETAIL)
    ok_(catalog_entry("fig13").is_graph)
    ok_(not catalog_entry("fig3b-outline").is_graph)


def test_every_non_stub_has_data():
    for entry in catalog_entries():
        if not entry.is_stub:
            ok_(len(load_segment_list(entry)) > 0, entry)


def test_outline_cycle_length():
    eq_(outline_cycle_length("fig3b-outline"), 22)
    with raises(ValueError):
        outline_cycle_length("fig3a")


def test_catalog_directory_override(tmp_path, monkeypatch):
    shutil.copy(segment_path("fig1a"), str(tmp_path / "fig1a.seg"))
    monkeypatch.setenv(CATALOG_DIR_ENV_KEY, str(tmp_path))
    eq_(catalog_directory(), str(tmp_path))
    eq_(segment_path("fig1a"), str(tmp_path / "fig1a.seg"))
    with raises(UnknownCatalogEntry):
        segment_path("fig1b")


def test_entries_serialize_by_id():
    entry = catalog_entry("fig4")
    eq_(CatalogEntry.from_dict(entry.to_dict()), entry)
    ok_(CatalogEntry.from_dict(entry.to_dict()) is entry)


def test_default_expectations_not_shared():
    first = CatalogEntry("scratch-a", MATCHSTICK)
    second = CatalogEntry("scratch-b", MATCHSTICK)
    first.expected["rigid"] = True
    eq_(second.expected, {})


def test_smallest_known_edge_counts():
    eq_(sorted(SMALLEST_KNOWN_EDGES), list(range(4, 12)))
    eq_(
        [SMALLEST_KNOWN_EDGES[n] for n in range(4, 12)],
        [104, 115, 117, 159, 126, 273, 231, 771],
    )


def test_smallest_known_per_profile():
    fig4 = catalog_entry("fig4")
    eq_(fig4.smallest_known_edges, 104)
    ok_(fig4.smallest_known_is_symmetric)
    eq_(catalog_entry("fig9").smallest_known_edges, 126)
    eq_(catalog_entry("fig1a").smallest_known_edges, None)
    eq_(catalog_entry("fig13").smallest_known_is_symmetric, None)


def test_asymmetric_stubs_are_smallest_known():
    for entry_id in ("fig11", "fig12"):
        entry = catalog_entry(entry_id)
        eq_(entry.smallest_known_edges, entry.caption_edges)
        eq_(entry.smallest_known_is_symmetric, False)


def test_asymmetric_graphs_have_more_edges():
    for entry_id in ("fig4", "fig5", "fig6", "fig7", "fig8", "fig9", "fig10"):
        entry = catalog_entry(entry_id)
        ok_(entry.caption_edges > entry.smallest_known_edges, entry_id)
