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
Build, refine, verify and analyze matchstick graphs.

    %(prog)s {ingest, refine, verify, rigidity, symmetry, motifs, report,
              render, catalog, clear-cache} [INPUT ...] [options]

INPUT is a .seg stroke file, a .mge embedding or a catalog id (see
"catalog"). Stroke files and catalog graphs are refined before analysis,
.mge files are analyzed as given.

To build an embedding from strokes:
    %(prog)s ingest fig1a.seg -o fig1a.mge

To check a catalog graph against its caption:
    %(prog)s report fig4 --expect

To check every catalog graph:
    %(prog)s report --all --expect

To draw a graph:
    %(prog)s render fig13 -o fig13.svg

Exit status: 0 ok, 1 failed verification or expectation, 2 input error,
3 catalog entry without data.
"""

import argparse
import logging.config
import os
import sys

import pkg_resources

from .angle_fan import angle_fan
from .catalog import (
    OUTLINE,
    CatalogEntry,
    StubEntryError,
    catalog_entries,
    catalog_entry,
    designated_fan,
    ingest_entry,
    load_segment_list,
    outline_cycle_length,
    refined_entry,
)
from .embedding import read_embedding_file, write_embedding_file
from .ingestion import build_embedding, estimate_unit
from .motifs import motif_inventory
from .outer_shape import OuterBoundaryError, outer_boundary
from .refined_cache import RefinedCache
from .refinement import RefinementDivergence, refine
from .report import build_report, compare_expectations, format_report, summarize
from .rigidity import (
    analyze,
    combinatorial_dof,
    edge_removal_scan,
    flexible_after_removal,
    redundant_edges,
)
from .segment_list import read_segment_file
from .svg import render_svg, write_svg
from .symmetry import isometry_group, shape_symmetry
from .tolerance_policy import DEFAULT_TOLERANCES
from .verification import verify_matchstick
from .version import __version__

logging.config.fileConfig(pkg_resources.resource_filename(__name__, "logging.conf"))
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_NO_DATA = 3

ACTIONS = (
    "ingest",
    "refine",
    "verify",
    "rigidity",
    "symmetry",
    "motifs",
    "report",
    "render",
    "catalog",
    "clear-cache",
)

parser = argparse.ArgumentParser(usage=__doc__)

parser.add_argument(
    "--version",
    action="version",
    version="%(prog)s {version}".format(version=__version__),
)

parser.add_argument(
    "action",
    type=lambda arg: arg.lower().strip(),
    choices=ACTIONS,
    help=(
        '"ingest" builds an embedding from strokes, "refine" makes every edge '
        'length one, "verify" checks the matchstick conditions, "rigidity", '
        '"symmetry" and "motifs" run one analysis, "report" runs all of them, '
        '"render" writes SVG, "catalog" lists the bundled graphs and '
        '"clear-cache" deletes refined catalog graphs.'
    ),
)

parser.add_argument(
    "inputs",
    nargs="*",
    default=[],
    help="Stroke files (.seg), embeddings (.mge) or catalog ids",
)

parser.add_argument("-o", "--output", default=None, help="Output path (.mge or .svg)")

parser.add_argument(
    "--profile",
    default=None,
    help="Degree profile 'm,n' to verify, defaults to the catalog entry's",
)

parser.add_argument(
    "--expect",
    default=False,
    action="store_true",
    help="Compare against the catalog entry and fail on any mismatch",
)

parser.add_argument(
    "--all",
    default=False,
    action="store_true",
    help="Run on every catalog entry",
)

parser.add_argument(
    "--scan-removals",
    default=False,
    action="store_true",
    help="Report the degrees of freedom after removing each edge",
)

parser.add_argument(
    "--highlight-degree",
    type=int,
    default=None,
    help="Draw vertices of this degree enlarged and colored",
)

parser.add_argument(
    "--max-iter", type=int, default=200, help="Maximum refinement steps (default=200)"
)

parser.add_argument(
    "--verbose", default=False, action="store_true", help="Log debugging output"
)

tolerance_group = parser.add_argument_group("tolerances")
for _flag, _field in [
    ("--snap-tol", "snap_tol"),
    ("--unit-tol-raw", "unit_tol_raw"),
    ("--unit-tol", "unit_tol_refined"),
    ("--rank-tol", "rank_tol"),
    ("--sep-warn", "sep_warn"),
    ("--sep-fail", "sep_fail"),
    ("--angle-tol", "angle_tol"),
]:
    tolerance_group.add_argument(
        _flag,
        dest=_field,
        type=float,
        default=None,
        help="default=%g" % getattr(DEFAULT_TOLERANCES, _field),
    )


def tolerances_from_args(args):
    return DEFAULT_TOLERANCES.with_overrides(
        snap_tol=args.snap_tol,
        unit_tol_raw=args.unit_tol_raw,
        unit_tol_refined=args.unit_tol_refined,
        rank_tol=args.rank_tol,
        sep_warn=args.sep_warn,
        sep_fail=args.sep_fail,
        angle_tol=args.angle_tol,
    )


def parse_profile(text):
    if text is None:
        return None
    try:
        m, n = [int(part) for part in text.replace(";", ",").split(",")]
    except ValueError:
        raise ValueError("Expected --profile as 'm,n', got '%s'" % text)
    return m, n


def is_catalog_id(name):
    return name in CatalogEntry.all_registered_ids()


class LoadedInput(object):
    """
    Embedding resolved from a command line input, refined unless it came
    from a .mge file.
    """

    def __init__(self, name, embedding, refinement=None, entry=None):
        self.name = name
        self.embedding = embedding
        self.refinement = refinement
        self.entry = entry


def load_input(source, tol, max_iter, refined=True):
    if is_catalog_id(source):
        entry = catalog_entry(source)
        if entry.kind == OUTLINE:
            raise ValueError("%s is an outline drawing, not a graph" % source)
        if not refined:
            return LoadedInput(source, ingest_entry(entry, tol), entry=entry)
        refinement = refined_entry(entry, tol, max_iter)
        return LoadedInput(source, refinement.embedding, refinement, entry)
    if not os.path.exists(source):
        raise ValueError("No such file or catalog entry: %s" % source)
    if source.endswith(".mge"):
        return LoadedInput(source, read_embedding_file(source))
    embedding = build_embedding(read_segment_file(source), tol)
    if not refined:
        return LoadedInput(source, embedding)
    refinement = refine(embedding, tol, max_iter)
    return LoadedInput(source, refinement.embedding, refinement)


def emit(lines):
    for line in lines:
        print(line)


def stub_lines(entry):
    return [
        "name: %s" % entry.entry_id,
        "status: no data in paper source",
        "caption.vertices: %d" % entry.caption_vertices,
        "caption.edges: %d" % entry.caption_edges,
        "caption.profile: (%d;%d)" % tuple(entry.profile),
    ]


def outline_lines(entry, tol):
    segment_list = load_segment_list(entry)
    return [
        "name: %s" % entry.entry_id,
        "kind: %s" % entry.kind,
        "outline.strokes: %d" % len(segment_list),
        "outline.boundary_strokes: %d" % outline_cycle_length(entry, tol),
    ]


def run_ingest(args, tol):
    status = EXIT_OK
    for source in args.inputs:
        if is_catalog_id(source):
            segment_list = load_segment_list(source)
        else:
            segment_list = read_segment_file(source)
        unit = estimate_unit(segment_list, tol)
        embedding = build_embedding(segment_list, tol)
        print("%s: V=%d E=%d unit=%.6f" % (source, embedding.n_vertices, embedding.n_edges, unit))
        if args.output:
            write_embedding_file(embedding, args.output)
    return status


def run_refine(args, tol):
    status = EXIT_OK
    for source in args.inputs:
        loaded = load_input(source, tol, args.max_iter, refined=False)
        result = refine(loaded.embedding, tol, args.max_iter)
        emit(["name: %s" % source] + result.to_lines())
        if args.output:
            write_embedding_file(result.embedding, args.output)
        if not result.converged:
            status = EXIT_FAILED
    return status


def run_verify(args, tol):
    status = EXIT_OK
    for source in args.inputs:
        loaded = load_input(source, tol, args.max_iter)
        profile = parse_profile(args.profile)
        if profile is None and loaded.entry is not None:
            profile = loaded.entry.profile
        m, n = profile if profile is not None else (None, None)
        report = verify_matchstick(loaded.embedding, m, n, tol)
        emit(["name: %s" % source] + report.to_lines())
        if not report.passed:
            status = EXIT_FAILED
    return status


def run_rigidity(args, tol):
    for source in args.inputs:
        loaded = load_input(source, tol, args.max_iter)
        result = analyze(loaded.embedding, tol)
        lines = ["name: %s" % source] + result.to_lines()
        lines.append("rigidity.generic_dof: %d" % combinatorial_dof(loaded.embedding))
        if args.scan_removals:
            scan = edge_removal_scan(loaded.embedding, tol)
            lines.append(
                "rigidity.removals_flexible: %d/%d"
                % (len(flexible_after_removal(scan)), len(scan))
            )
            lines.append(
                "rigidity.redundant_edges: %s"
                % " ".join("%d-%d" % e for e in redundant_edges(scan))
            )
            for removal in scan:
                lines.append(
                    "rigidity.removal: %d-%d dof=%d%s"
                    % (
                        removal.edge[0],
                        removal.edge[1],
                        removal.dof_after,
                        " disconnected" if removal.disconnected else "",
                    )
                )
        emit(lines)
    return EXIT_OK


def run_symmetry(args, tol):
    for source in args.inputs:
        loaded = load_input(source, tol, args.max_iter)
        lines = ["name: %s" % source] + isometry_group(loaded.embedding, tol).to_lines()
        try:
            shape = outer_boundary(loaded.embedding)
        except OuterBoundaryError as e:
            lines.append("note: %s" % e)
        else:
            lines.append("outline.length: %d" % len(shape))
            lines.extend(shape_symmetry(shape, tol).to_lines(prefix="outline"))
        if loaded.entry is not None and "angle_fan" in loaded.entry.expected:
            vertex, start_edge, orientation = designated_fan(loaded.entry, loaded.embedding)
            lines.extend(angle_fan(loaded.embedding, vertex, start_edge, orientation).to_lines())
        emit(lines)
    return EXIT_OK


def run_motifs(args, tol):
    for source in args.inputs:
        loaded = load_input(source, tol, args.max_iter)
        emit(["name: %s" % source] + motif_inventory(loaded.embedding, tol).to_lines())
    return EXIT_OK


def report_one(source, args, tol):
    """
    Print the report for one input, returning its exit status.
    """
    entry = catalog_entry(source) if is_catalog_id(source) else None
    if entry is not None and entry.is_stub:
        emit(stub_lines(entry))
        return EXIT_NO_DATA
    if entry is not None and entry.kind == OUTLINE:
        emit(outline_lines(entry, tol))
        return EXIT_OK
    if args.expect and entry is None:
        raise ValueError("--expect needs a catalog id, got %s" % source)
    profile = parse_profile(args.profile)
    scan = True if args.scan_removals else None
    if entry is not None:
        report = build_report(
            entry=entry, tol=tol, max_iter=args.max_iter, profile=profile, scan_removals=scan
        )
    else:
        loaded = load_input(source, tol, args.max_iter, refined=False)
        report = build_report(
            embedding=loaded.embedding,
            tol=tol,
            max_iter=args.max_iter,
            profile=profile,
            scan_removals=scan,
        )
    expectations = compare_expectations(report, entry) if args.expect else None
    emit(format_report(report, expectations))
    logger.info("%s", summarize(report))
    if not report.passed:
        return EXIT_FAILED
    if expectations is not None and not all(e.ok for e in expectations):
        return EXIT_FAILED
    return EXIT_OK


def run_report(args, tol):
    if args.all:
        status = EXIT_OK
        for entry in catalog_entries():
            if entry.is_stub:
                emit(stub_lines(entry))
                continue
            if report_one(entry.entry_id, args, tol) != EXIT_OK:
                status = EXIT_FAILED
            print("")
        return status
    statuses = [report_one(source, args, tol) for source in args.inputs]
    return max(statuses) if statuses else EXIT_OK


def run_render(args, tol):
    for source in args.inputs:
        loaded = load_input(source, tol, args.max_iter)
        if args.output:
            write_svg(loaded.embedding, args.output, highlight_degree=args.highlight_degree)
        else:
            sys.stdout.write(render_svg(loaded.embedding, highlight_degree=args.highlight_degree))
    return EXIT_OK


def catalog_lines():
    lines = []
    for entry in catalog_entries():
        fields = ["%-14s" % entry.entry_id, "%-10s" % entry.kind]
        if entry.caption_vertices is not None:
            fields.append("V=%d E=%d" % (entry.caption_vertices, entry.caption_edges))
        if entry.profile is not None:
            fields.append("profile=(%d;%d)" % tuple(entry.profile))
        for key in ("count_m", "count_n", "group", "rotation_order"):
            if key in entry.expected:
                fields.append("%s=%s" % (key, entry.expected[key]))
        for name, count in sorted(entry.expected.get("motifs", {}).items()):
            fields.append("%s=%d" % (name, count))
        if entry.smallest_known_edges is not None:
            fields.append(
                "smallest_known_E=%d (%s)"
                % (
                    entry.smallest_known_edges,
                    "symmetric" if entry.smallest_known_is_symmetric else "asymmetric",
                )
            )
        if entry.notes:
            fields.append("# %s" % entry.notes)
        lines.append(" ".join(fields))
    return lines


def run_catalog(args, tol):
    emit(catalog_lines())
    return EXIT_OK


def run_clear_cache(args, tol):
    cache = RefinedCache()
    logger.info("Deleting %s", cache.cache_directory_path)
    cache.delete_cache_directory()
    return EXIT_OK


ACTION_FUNCTIONS = {
    "ingest": run_ingest,
    "refine": run_refine,
    "verify": run_verify,
    "rigidity": run_rigidity,
    "symmetry": run_symmetry,
    "motifs": run_motifs,
    "report": run_report,
    "render": run_render,
    "catalog": run_catalog,
    "clear-cache": run_clear_cache,
}


def main(args_list=None):
    args = parser.parse_args(args_list)
    if args.verbose:
        logging.getLogger("pymatchstick").setLevel(logging.DEBUG)
    try:
        tol = tolerances_from_args(args)
        if not args.inputs and not args.all and args.action not in ("catalog", "clear-cache"):
            raise ValueError("No inputs given for '%s'" % args.action)
        return ACTION_FUNCTIONS[args.action](args, tol)
    except StubEntryError as e:
        logger.error("%s", e)
        emit(stub_lines(e.entry))
        return EXIT_NO_DATA
    except RefinementDivergence as e:
        logger.error("%s", e)
        return EXIT_FAILED
    except (ValueError, OSError) as e:
        logger.error("%s", e)
        print("error: %s" % e, file=sys.stderr)
        return EXIT_INPUT_ERROR


def run():
    sys.exit(main())
