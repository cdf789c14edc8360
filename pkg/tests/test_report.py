from pytest import raises

from pymatchstick.catalog import catalog_entry
from pymatchstick.report import (
    Expectation,
    PipelineReport,
    build_report,
    compare_expectations,
    format_report,
    summarize,
)

from .common import eq_, ok_, run_catalog_entries, graph_entry_ids
from .data import hexagon_wheel, unit_triangle


@run_catalog_entries(*graph_entry_ids)
def test_catalog_expectations_met(entry_id):
    report = build_report(entry=entry_id)
    ok_(report.passed)
    failed = [e.to_line() for e in compare_expectations(report, entry_id) if not e.ok]
    eq_(failed, [])


def test_expectations_cover_claims():
    report = build_report(entry="fig3a")
    keys = [e.key for e in compare_expectations(report, "fig3a")]
    for key in ("converged", "verified", "vertices", "edges", "profile", "count_n", "rigid", "group", "outline_point_symmetric", "outline"):
        ok_(key in keys, key)


def test_fig13_report_scans_removals():
    report = build_report(entry="fig13")
    eq_(len(report.removals), report.embedding.n_edges)
    ok_(report.fan is not None)
    lines = format_report(report, compare_expectations(report, "fig13"))
    ok_("expect.angle_fan: ok" in " ".join(lines))
    eq_(lines[-1], "expect.summary: all met")


def test_report_on_plain_embedding():
    report = build_report(embedding=hexagon_wheel)
    ok_(report.passed)
    eq_(report.symmetry.group, "D_6")
    eq_(report.removals, None)
    eq_(report.fan, None)
    lines = format_report(report)
    eq_(lines[0], "name: wheel")
    ok_("vertices: 7" in lines)
    ok_(not any(line.startswith("expect.") for line in lines))


def test_report_with_profile():
    report = build_report(embedding=hexagon_wheel, profile=(2, 4))
    ok_(not report.passed)
    ok_("verify.summary: fail" in format_report(report))


def test_scan_on_request():
    report = build_report(embedding=unit_triangle, scan_removals=True)
    eq_(len(report.removals), 3)
    ok_("rigidity.removals_flexible: 3/3" in format_report(report))


def test_summary():
    summary = summarize(build_report(embedding=unit_triangle))
    ok_(summary.startswith("triangle: V=3 E=3 matchstick=pass"))
    ok_("group=D_3" in summary)


def test_failed_expectation_line():
    expectation = Expectation(key="rigid", expected=True, got=False, ok=False)
    eq_(expectation.to_line(), "expect.rigid: FAIL (expected True, got False)")


def test_mismatch_detected():
    report = build_report(entry="fig2a")
    results = compare_expectations(report, catalog_entry("fig2b"))
    ok_(any(not e.ok and e.key == "rotation_order" for e in results))


def test_requires_input():
    with raises(ValueError):
        build_report()


def test_reports_do_not_share_notes():
    first = PipelineReport(name="a", refinement=None, verification=None)
    second = PipelineReport(name="b", refinement=None, verification=None)
    first.notes.append("checked")
    eq_(second.notes, [])
