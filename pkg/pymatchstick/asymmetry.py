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
The four conditions for a completely asymmetric matchstick graph:

    1. the graph is rigid
    2. it has no point, rotational or mirror symmetry
    3. its outer shape is asymmetric
    4. it can't be cut into rigid pieces and rearranged into a similar
       graph breaking 1-3

The first three are decided here. For the fourth only the inventory of
rigid building blocks is listed, along with any known symmetric graphs
built from the same blocks.
"""

import logging

from serializable import Serializable

from .motifs import motif_inventory
from .outer_shape import outer_boundary
from .rigidity import analyze
from .symmetry import isometry_group, shape_symmetry
from .tolerance_policy import DEFAULT_TOLERANCES

logger = logging.getLogger(__name__)

UNDECIDED = "not decided by this tool"


class AsymmetryReport(Serializable):
    def __init__(
        self,
        name,
        rigid,
        dof,
        group,
        isometry_trivial,
        outline_group,
        outline_trivial,
        motif_counts,
        rearrangement_candidates,
    ):
        self.name = name
        self.rigid = rigid
        self.dof = dof
        self.group = group
        self.isometry_trivial = isometry_trivial
        self.outline_group = outline_group
        self.outline_trivial = outline_trivial
        self.motif_counts = motif_counts
        self.rearrangement_candidates = rearrangement_candidates

    @property
    def conditions(self):
        return {
            1: self.rigid,
            2: self.isometry_trivial,
            3: self.outline_trivial,
        }

    @property
    def decided_conditions_met(self):
        return all(self.conditions.values())

    def __str__(self):
        return "AsymmetryReport(name='%s', conditions=%s)" % (self.name, self.conditions)

    def to_lines(self, prefix="asymmetry"):
        lines = [
            "%s.condition_1_rigid: %s" % (prefix, self.rigid),
            "%s.condition_2_no_isometry: %s (%s)" % (prefix, self.isometry_trivial, self.group),
            "%s.condition_3_asymmetric_outline: %s (%s)"
            % (prefix, self.outline_trivial, self.outline_group),
            "%s.condition_4_no_rearrangement: %s" % (prefix, UNDECIDED),
        ]
        for name in sorted(self.motif_counts):
            lines.append("%s.blocks.%s: %d" % (prefix, name, self.motif_counts[name]))
        if self.rearrangement_candidates:
            lines.append(
                "%s.same_blocks_as_symmetric: %s"
                % (prefix, " ".join(self.rearrangement_candidates))
            )
        return lines


def _rearrangement_candidates(counts, references):
    """
    Names of the symmetric reference graphs holding as many copies of this
    graph's most frequent building block.
    """
    if not references or not any(counts.values()):
        return []
    dominant = max(sorted(counts), key=lambda name: counts[name])
    return sorted(
        name
        for name, reference_counts in references.items()
        if reference_counts.get(dominant, 0) == counts[dominant]
    )


def asymmetry_report(embedding, tol=DEFAULT_TOLERANCES, references=None, inventory=None):
    """
    Evaluate the asymmetry conditions on a refined, verified embedding.

    Parameters
    ----------
    embedding : Embedding

    tol : TolerancePolicy

    references : dict, optional
        Name to motif counts of known symmetric graphs, used to point out
        graphs made of the same blocks.

    inventory : MotifInventory, optional
        Reused instead of searching for motifs again.
    """
    rigidity = analyze(embedding, tol)
    group = isometry_group(embedding, tol)
    outline = shape_symmetry(outer_boundary(embedding), tol)
    if inventory is None:
        inventory = motif_inventory(embedding, tol)
    report = AsymmetryReport(
        name=embedding.name,
        rigid=rigidity.rigid,
        dof=rigidity.dof,
        group=group.group,
        isometry_trivial=group.is_trivial,
        outline_group=outline.group,
        outline_trivial=outline.is_trivial,
        motif_counts=dict(inventory.counts),
        rearrangement_candidates=_rearrangement_candidates(inventory.counts, references),
    )
    logger.info("%s", report)
    return report
