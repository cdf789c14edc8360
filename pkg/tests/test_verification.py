import math

from pymatchstick import DEFAULT_TOLERANCES, Embedding
from pymatchstick.catalog import catalog_entry, refined_entry
from pymatchstick.verification import check_noncrossing, check_unit_lengths, verify_matchstick

from .common import eq_, ok_, gt_, lte_, run_catalog_entries, matchstick_entry_ids
from .data import hexagon_wheel, unit_square, unit_triangle

crossing_pair = Embedding(
    vertices=[(0.0, 0.0), (1.0, 0.0), (0.5, -0.5), (0.5, 0.5)],
    edges=[(0, 1), (2, 3)],
    name="cross",
)

near_pair = Embedding(
    vertices=[(0.0, 0.0), (1.0, 0.0), (0.0, 5e-4), (1.0, 5e-4)],
    edges=[(0, 1), (2, 3)],
    name="near",
)


def test_triangle_passes():
    report = verify_matchstick(unit_triangle)
    ok_(report.passed)
    eq_(report.summary, "pass")
    eq_(report.violations, [])


def test_unit_lengths():
    ok, deviation = check_unit_lengths(unit_square)
    ok_(ok)
    lte_(deviation, 1e-15)
    ok, deviation = check_unit_lengths(unit_square.transformed(scale=1.001))
    ok_(not ok)
    ok_(abs(deviation - 1e-3) < 1e-12)


def test_crossing_edges():
    ok, violations, near_contacts = check_noncrossing(crossing_pair)
    ok_(not ok)
    eq_(violations, [((0, 1), (2, 3))])
    eq_(near_contacts, [])


def test_crossing_report_fails():
    report = verify_matchstick(crossing_pair)
    ok_(not report.passed)
    ok_(not report.planarity_ok)
    ok_(not report.connected)
    ok_("verify.violation: 0-1 2-3" in report.to_lines())


def test_near_contact_is_not_a_violation():
    ok, violations, near_contacts = check_noncrossing(near_pair)
    ok_(ok)
    eq_(len(near_contacts), 1)
    pair, separation = near_contacts[0]
    eq_(pair, ((0, 1), (2, 3)))
    ok_(abs(separation - 5e-4) < 1e-15)


def test_near_contact_outside_warning_distance():
    tol = DEFAULT_TOLERANCES.with_overrides(sep_warn=1e-4)
    ok, _, near_contacts = check_noncrossing(near_pair, tol)
    ok_(ok)
    eq_(near_contacts, [])


def test_overlapping_adjacent_edges():
    angle = math.radians(1e-8)
    embedding = Embedding(
        vertices=[(0.0, 0.0), (1.0, 0.0), (math.cos(angle), math.sin(angle))],
        edges=[(0, 1), (0, 2)],
    )
    ok, violations, _ = check_noncrossing(embedding)
    ok_(not ok)
    eq_(violations, [((0, 1), (0, 2))])


def test_profile_checked_when_given():
    ok_(verify_matchstick(hexagon_wheel, 3, 6).passed)
    report = verify_matchstick(hexagon_wheel, 2, 4)
    ok_(not report.profile_ok)
    eq_(report.profile_violations, list(range(7)))


def test_profile_skipped_without_degrees():
    report = verify_matchstick(hexagon_wheel)
    ok_(report.profile_ok)
    eq_(report.profile, None)


@run_catalog_entries(*matchstick_entry_ids)
def test_refined_catalog_graphs_are_matchstick_graphs(entry_id):
    entry = catalog_entry(entry_id)
    m, n = entry.profile
    report = verify_matchstick(refined_entry(entry).embedding, m, n)
    ok_(report.passed, "\n".join(report.to_lines()))
    for key in ("count_m", "count_n"):
        if key in entry.expected:
            eq_(getattr(report.profile, key), entry.expected[key])


@run_catalog_entries("fig1a", "fig1b", "fig1c", "fig1d", "fig13")
def test_refined_patterns_and_detail_are_matchstick_graphs(entry_id):
    report = verify_matchstick(refined_entry(entry_id).embedding)
    ok_(report.passed, "\n".join(report.to_lines()))


def test_fig13_near_contact_with_wider_warning():
    embedding = refined_entry("fig13").embedding
    eq_(verify_matchstick(embedding).near_contacts, [])
    tol = DEFAULT_TOLERANCES.with_overrides(sep_warn=1e-2)
    report = verify_matchstick(embedding, tol=tol)
    ok_(report.passed)
    gt_(len(report.near_contacts), 0)


def test_verdict_unchanged_by_rigid_motion_and_relabeling():
    embedding = refined_entry("fig4").embedding
    permutation = list(reversed(range(embedding.n_vertices)))
    moved = embedding.transformed(
        rotation_degrees=123.0, translation=(-7.5, 2.25), reflect=True
    ).relabeled(permutation)
    first = verify_matchstick(embedding, 4, 4)
    second = verify_matchstick(moved, 4, 4)
    ok_(first.passed)
    eq_(second.passed, first.passed)
    eq_(second.unit_ok, first.unit_ok)
    eq_(second.planarity_ok, first.planarity_ok)
    eq_(len(second.near_contacts), len(first.near_contacts))
    eq_(second.profile.to_tuple(), first.profile.to_tuple())
    lte_(abs(second.max_abs_deviation - first.max_abs_deviation), 1e-12)


def test_crossing_found_after_rigid_motion_and_relabeling():
    moved = crossing_pair.transformed(rotation_degrees=30.0, translation=(1.0, 1.0))
    moved = moved.relabeled([3, 2, 1, 0])
    ok, violations, _ = check_noncrossing(moved)
    ok_(not ok)
    eq_(violations, [((0, 1), (2, 3))])
