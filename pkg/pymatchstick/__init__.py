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

from .angle_fan import AngleFan, angle_fan
from .asymmetry import AsymmetryReport, asymmetry_report
from .catalog import (
    CatalogEntry,
    catalog_entries,
    catalog_entry,
    ingest_entry,
    load_segment_list,
    refined_entry,
)
from .embedding import (
    DegreeProfile,
    Embedding,
    degree_profile,
    read_embedding,
    read_embedding_file,
    write_embedding,
    write_embedding_file,
)
from .geometry import Point, Segment
from .ingestion import build_embedding, estimate_unit
from .motifs import MotifInventory, MotifMatch, Pattern, find_motifs, find_near_motifs, motif_inventory
from .outer_shape import OuterShape, outer_boundary
from .refined_cache import RefinedCache
from .refinement import RefineResult, refine, residual
from .report import build_report, compare_expectations, format_report
from .rigidity import RigidityResult, analyze, combinatorial_dof, edge_removal_scan
from .segment_list import SegmentList, parse_segments, read_segment_file
from .svg import render_svg, write_svg
from .symmetry import SymmetryReport, isometry_group, shape_symmetry
from .tolerance_policy import DEFAULT_TOLERANCES, TolerancePolicy
from .verification import VerificationReport, verify_matchstick
from .version import __version__

__all__ = [
    "__version__",
    "AngleFan",
    "angle_fan",
    "AsymmetryReport",
    "asymmetry_report",
    "CatalogEntry",
    "catalog_entries",
    "catalog_entry",
    "ingest_entry",
    "load_segment_list",
    "refined_entry",
    "DegreeProfile",
    "Embedding",
    "degree_profile",
    "read_embedding",
    "read_embedding_file",
    "write_embedding",
    "write_embedding_file",
    "Point",
    "Segment",
    "build_embedding",
    "estimate_unit",
    "MotifInventory",
    "MotifMatch",
    "Pattern",
    "find_motifs",
    "find_near_motifs",
    "motif_inventory",
    "OuterShape",
    "outer_boundary",
    "RefinedCache",
    "RefineResult",
    "refine",
    "residual",
    "build_report",
    "compare_expectations",
    "format_report",
    "RigidityResult",
    "analyze",
    "combinatorial_dof",
    "edge_removal_scan",
    "SegmentList",
    "parse_segments",
    "read_segment_file",
    "render_svg",
    "write_svg",
    "SymmetryReport",
    "isometry_group",
    "shape_symmetry",
    "DEFAULT_TOLERANCES",
    "TolerancePolicy",
    "VerificationReport",
    "verify_matchstick",
]
