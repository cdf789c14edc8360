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
Full pipeline over one embedding: refine, verify, rigidity, symmetry,
outer shape, asymmetry conditions, building blocks and, when a catalog
entry designates one, an angle fan. Output is a list of `key: value`
lines.
"""

import logging

from serializable import Serializable

from .angle_fan import angle_fan
from .asymmetry import asymmetry_report
from .catalog import (
    catalog_entry,
    designated_fan,
    outline_cycle_length,
    refined_entry,
)
from .motifs import motif_inventory
from .outer_shape import OuterBoundaryError, outer_boundary
from .refinement import refine
from .rigidity import (
    DisconnectedEmbeddingError,
    analyze,
    combinatorial_dof,
    edge_removal_scan,
    flexible_after_removal,
    redundant_edges,
)
from .symmetry import isometry_group, shape_symmetry
from .tolerance_policy import DEFAULT_TOLERANCES
from .verification import verify_matchstick

logger = logging.getLogger(__name__)

ANGLE_FAN_TOLERANCE = 1e-4
ANGLE_SUM_TOLERANCE = 1e-9


class PipelineReport(Serializable):
    def __init__(
        self,
        name,
        refinement,
        verification,
        rigidity=None,
        generic_dof=None,
        removals=None,
        symmetry=None,
        outer_shape=None,
        outline_symmetry=None,
        asymmetry=None,
        motifs=None,
        fan=None,
        notes=None,
    ):
        self.name = name
        self.refinement = refinement
        self.verification = verification
        self.rigidity = rigidity
        self.generic_dof = generic_dof
        self.removals = removals
        self.symmetry = symmetry
        self.outer_shape = outer_shape
        self.outline_symmetry = outline_symmetry
        self.asymmetry = asymmetry
        self.motifs = motifs
        self.fan = fan
        self.notes = notes if notes is not None else []

    @property
    def embedding(self):
        return self.refinement.embedding

    @property
    def passed(self):
        return self.refinement.converged and self.verification.passed

    def __str__(self):
        return "PipelineReport(name='%s', passed=%s)" % (self.name, self.passed)


class Expectation(Serializable):
    def __init__(self, key, expected, got, ok):
        self.key = key
        self.expected = expected
        self.got = got
        self.ok = ok

    def __str__(self):
        return "Expectation(key='%s', expected=%s, got=%s, ok=%s)" % (
            self.key,
            self.expected,
            self.got,
            self.ok,
        )

    def to_line(self):
        return "expect.%s: %s (expected %s, got %s)" % (
            self.key,
            "ok" if self.ok else "FAIL",
            self.expected,
            self.got,
        )


def _reference_counts(entry, tol, max_iter):
    reference_id = entry.expected.get("rearranges_to") if entry is not None else None
    if reference_id is None:
        return None
    reference = refined_entry(catalog_entry(reference_id), tol, max_iter).embedding
    return {reference_id: motif_inventory(reference, tol).counts}


def build_report(
    embedding=None,
    entry=None,
    tol=DEFAULT_TOLERANCES,
    max_iter=200,
    profile=None,
    scan_removals=None,
):
    """
    Run the pipeline on a catalog entry or on an embedding.

    Parameters
    ----------
    embedding : Embedding, optional
        Refined first, required when `entry` is None.

    entry : CatalogEntry or str, optional
        Catalog graph, whose refined embedding comes from the cache.

    tol : TolerancePolicy

    max_iter : int

    profile : (int, int), optional
        Degree profile to verify, defaults to the entry's.

    scan_removals : bool, optional
        Run the single edge removal scan, by default only for entries
        claiming every removal leaves them flexible.
    """
    if entry is not None:
        entry = catalog_entry(entry)
        refinement = refined_entry(entry, tol, max_iter)
        if profile is None:
            profile = entry.profile
        if scan_removals is None:
            scan_removals = bool(entry.expected.get("all_removals_flexible"))
    elif embedding is not None:
        refinement = refine(embedding, tol, max_iter)
    else:
        raise ValueError("Expected an embedding or a catalog entry")
    refined = refinement.embedding
    m, n = profile if profile is not None else (None, None)
    verification = verify_matchstick(refined, m, n, tol)
    report = PipelineReport(
        name=refined.name,
        refinement=refinement,
        verification=verification,
    )
    if refined.n_vertices < 3:
        report.notes.append("fewer than 3 vertices, analysis skipped")
        return report
    try:
        report.rigidity = analyze(refined, tol)
    except DisconnectedEmbeddingError as e:
        report.notes.append(str(e))
        return report
    report.generic_dof = combinatorial_dof(refined)
    if scan_removals:
        report.removals = edge_removal_scan(refined, tol)
    report.symmetry = isometry_group(refined, tol)
    report.motifs = motif_inventory(refined, tol)
    try:
        report.outer_shape = outer_boundary(refined)
    except OuterBoundaryError as e:
        report.notes.append(str(e))
    else:
        report.outline_symmetry = shape_symmetry(report.outer_shape, tol)
        report.asymmetry = asymmetry_report(
            refined,
            tol,
            references=_reference_counts(entry, tol, max_iter),
            inventory=report.motifs,
        )
    if entry is not None and "angle_fan" in entry.expected:
        vertex, start_edge, orientation = designated_fan(entry, refined)
        report.fan = angle_fan(refined, vertex, start_edge, orientation)
    logger.info("%s", report)
    return report


def _check(key, expected, got, ok=None):
    return Expectation(key=key, expected=expected, got=got, ok=(expected == got) if ok is None else ok)


def compare_expectations(report, entry):
    """
    Compare a report against every property the catalog entry claims.
    """
    entry = catalog_entry(entry)
    expected = entry.expected
    embedding = report.embedding
    results = [
        _check("converged", True, report.refinement.converged),
        _check("verified", True, report.verification.passed),
    ]
    if "vertices" in expected:
        results.append(_check("vertices", expected["vertices"], embedding.n_vertices))
    if "edges" in expected:
        results.append(_check("edges", expected["edges"], embedding.n_edges))
    if "profile" in expected:
        got = report.verification.profile
        results.append(
            _check(
                "profile",
                tuple(expected["profile"]),
                (got.m, got.n) if got is not None else None,
            )
        )
        for key in ("count_m", "count_n"):
            if key in expected:
                results.append(
                    _check(key, expected[key], getattr(got, key) if got is not None else None)
                )
    if "rigid" in expected:
        results.append(
            _check("rigid", expected["rigid"], report.rigidity.rigid if report.rigidity else None)
        )
    if "isostatic" in expected:
        results.append(
            _check(
                "isostatic",
                expected["isostatic"],
                report.rigidity.isostatic if report.rigidity else None,
            )
        )
    if "all_removals_flexible" in expected:
        got = None
        if report.removals is not None:
            got = len(flexible_after_removal(report.removals)) == len(report.removals)
        results.append(_check("all_removals_flexible", expected["all_removals_flexible"], got))
    symmetry = report.symmetry
    for key in ("group", "mirror_count", "rotation_order"):
        if key in expected:
            results.append(
                _check(key, expected[key], getattr(symmetry, key) if symmetry else None)
            )
    outline_symmetry = report.outline_symmetry
    if "outline_point_symmetric" in expected:
        results.append(
            _check(
                "outline_point_symmetric",
                expected["outline_point_symmetric"],
                outline_symmetry.point_symmetric if outline_symmetry else None,
            )
        )
    if "outline_group" in expected:
        results.append(
            _check(
                "outline_group",
                expected["outline_group"],
                outline_symmetry.group if outline_symmetry else None,
            )
        )
    if "outline" in expected:
        results.append(
            _check(
                "outline",
                outline_cycle_length(expected["outline"]),
                len(report.outer_shape) if report.outer_shape else None,
            )
        )
    for name, count in sorted(expected.get("motifs", {}).items()):
        got = report.motifs.counts.get(name) if report.motifs else None
        results.append(_check("motifs.%s" % name, count, got))
    if "angle_fan" in expected:
        printed = list(expected["angle_fan"]["angles"])
        got = report.fan.angles if report.fan else None
        ok = (
            got is not None
            and len(got) == len(printed)
            and all(abs(a - b) <= ANGLE_FAN_TOLERANCE for a, b in zip(got, printed))
            and abs(sum(got) - 360.0) <= ANGLE_SUM_TOLERANCE
        )
        results.append(
            _check(
                "angle_fan",
                " ".join("%.4f" % a for a in printed),
                " ".join("%.4f" % a for a in got) if got else None,
                ok=ok,
            )
        )
    return results


def format_report(report, expectations=None):
    """
    `key: value` lines for a report and optionally its expectations.
    """
    embedding = report.embedding
    lines = [
        "name: %s" % report.name,
        "vertices: %d" % embedding.n_vertices,
        "edges: %d" % embedding.n_edges,
    ]
    lines.extend(report.refinement.to_lines())
    lines.extend(report.verification.to_lines())
    if report.rigidity is not None:
        lines.extend(report.rigidity.to_lines())
        lines.append("rigidity.generic_dof: %d" % report.generic_dof)
    if report.removals is not None:
        flexible = flexible_after_removal(report.removals)
        lines.append(
            "rigidity.removals_flexible: %d/%d" % (len(flexible), len(report.removals))
        )
        lines.append(
            "rigidity.redundant_edges: %s"
            % " ".join("%d-%d" % e for e in redundant_edges(report.removals))
        )
        lines.append(
            "rigidity.removals_disconnecting: %d"
            % sum(1 for r in report.removals if r.disconnected)
        )
    if report.symmetry is not None:
        lines.extend(report.symmetry.to_lines())
    if report.outer_shape is not None:
        lines.append("outline.length: %d" % len(report.outer_shape))
        lines.append("outline.cycle: %s" % " ".join(str(v) for v in report.outer_shape.cycle))
    if report.outline_symmetry is not None:
        lines.extend(report.outline_symmetry.to_lines(prefix="outline"))
    if report.asymmetry is not None:
        lines.extend(report.asymmetry.to_lines())
    if report.motifs is not None:
        lines.extend(report.motifs.to_lines())
    if report.fan is not None:
        lines.extend(report.fan.to_lines())
    for note in report.notes:
        lines.append("note: %s" % note)
    if expectations is not None:
        lines.extend(e.to_line() for e in expectations)
        lines.append(
            "expect.summary: %s"
            % ("all met" if all(e.ok for e in expectations) else "FAILED")
        )
    return lines


def summarize(report):
    parts = [
        "%s:" % report.name,
        "V=%d E=%d" % (report.embedding.n_vertices, report.embedding.n_edges),
        "matchstick=%s" % report.verification.summary,
    ]
    if report.rigidity is not None:
        parts.append("dof=%d" % report.rigidity.dof)
    if report.symmetry is not None:
        parts.append("group=%s" % report.symmetry.group)
    if report.outline_symmetry is not None:
        parts.append("outline=%s" % report.outline_symmetry.group)
    return " ".join(parts)
