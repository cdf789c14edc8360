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
Is an embedding a matchstick graph? Unit edge lengths, no contact between
non-adjacent edges, no overlap between adjacent ones, connectivity and an
optional (m;n) degree profile.
"""

import logging

import numpy as np
from serializable import Serializable

from .embedding import ProfileViolation, degree_profile
from .geometry import segment_separations
from .tolerance_policy import DEFAULT_TOLERANCES

logger = logging.getLogger(__name__)


class VerificationReport(Serializable):
    def __init__(
        self,
        name,
        unit_ok,
        max_abs_deviation,
        planarity_ok,
        violations,
        near_contacts,
        profile_ok,
        profile,
        profile_violations,
        connected,
    ):
        self.name = name
        self.unit_ok = unit_ok
        self.max_abs_deviation = max_abs_deviation
        self.planarity_ok = planarity_ok
        self.violations = violations
        self.near_contacts = near_contacts
        self.profile_ok = profile_ok
        self.profile = profile
        self.profile_violations = profile_violations
        self.connected = connected

    @property
    def passed(self):
        return self.unit_ok and self.planarity_ok and self.profile_ok and self.connected

    @property
    def summary(self):
        return "pass" if self.passed else "fail"

    def __str__(self):
        return "VerificationReport(name='%s', summary=%s)" % (self.name, self.summary)

    def to_lines(self, prefix="verify"):
        lines = [
            ("unit_ok", self.unit_ok),
            ("max_abs_deviation", "%.3e" % self.max_abs_deviation),
            ("planarity_ok", self.planarity_ok),
            ("violations", len(self.violations)),
            ("near_contacts", len(self.near_contacts)),
            ("connected", self.connected),
            ("profile_ok", self.profile_ok),
        ]
        if self.profile is not None:
            lines.extend(
                [
                    ("profile", "(%d;%d)" % (self.profile.m, self.profile.n)),
                    ("count_m", self.profile.count_m),
                    ("count_n", self.profile.count_n),
                ]
            )
        if self.profile_violations:
            lines.append(
                ("profile_violations", " ".join(str(v) for v in self.profile_violations))
            )
        for (e1, e2) in self.violations:
            lines.append(("violation", "%d-%d %d-%d" % (e1 + e2)))
        for (e1, e2), separation in self.near_contacts:
            lines.append(("near_contact", "%d-%d %d-%d %.3e" % (e1 + e2 + (separation,))))
        lines.append(("summary", self.summary))
        return ["%s.%s: %s" % (prefix, key, value) for key, value in lines]


def check_unit_lengths(embedding, tol=DEFAULT_TOLERANCES.unit_tol_refined):
    """
    Returns whether every edge length is within `tol` of 1, along with the
    largest absolute deviation.
    """
    max_abs_deviation = float(np.max(np.abs(embedding.edge_lengths - 1.0)))
    return max_abs_deviation <= tol, max_abs_deviation


def _edge_pairs(embedding):
    edges = embedding.edge_array
    first, second = np.triu_indices(len(edges), k=1)
    return edges[first], edges[second]


def _adjacent_overlaps(embedding, a, b, tol):
    """
    Pairs of edges sharing a vertex whose directions from it are closer than
    tol.angle_tol degrees.
    """
    coords = embedding.coordinates
    shared = np.where((a[:, 0] == b[:, 0]) | (a[:, 0] == b[:, 1]), a[:, 0], a[:, 1])
    a_other = np.where(a[:, 0] == shared, a[:, 1], a[:, 0])
    b_other = np.where(b[:, 0] == shared, b[:, 1], b[:, 0])
    u = coords[a_other] - coords[shared]
    w = coords[b_other] - coords[shared]
    cross = u[:, 0] * w[:, 1] - u[:, 1] * w[:, 0]
    dot = np.einsum("ij,ij->i", u, w)
    angles = np.degrees(np.arctan2(np.abs(cross), dot))
    return angles < tol.angle_tol


def check_noncrossing(embedding, tol=DEFAULT_TOLERANCES):
    """
    Check that non-adjacent edges keep apart and adjacent edges don't lie on
    top of each other.

    Returns
    -------
    (ok, violations, near_contacts) where violations is a sorted list of
    unordered edge pairs and near_contacts a list of (edge pair, separation)
    for non-adjacent pairs closer than tol.sep_warn.
    """
    a, b = _edge_pairs(embedding)
    if len(a) == 0:
        return True, [], []
    coords = embedding.coordinates
    disjoint = (
        (a[:, 0] != b[:, 0])
        & (a[:, 0] != b[:, 1])
        & (a[:, 1] != b[:, 0])
        & (a[:, 1] != b[:, 1])
    )
    da, db = a[disjoint], b[disjoint]
    separations = segment_separations(
        coords[da[:, 0]], coords[da[:, 1]], coords[db[:, 0]], coords[db[:, 1]]
    )
    crossing = separations <= tol.sep_fail
    near = (separations > tol.sep_fail) & (separations <= tol.sep_warn)

    aa, ab = a[~disjoint], b[~disjoint]
    overlapping = _adjacent_overlaps(embedding, aa, ab, tol)

    def as_pair(e1, e2):
        return tuple(sorted([(int(e1[0]), int(e1[1])), (int(e2[0]), int(e2[1]))]))

    violations = sorted(
        [as_pair(e1, e2) for e1, e2 in zip(da[crossing], db[crossing])]
        + [as_pair(e1, e2) for e1, e2 in zip(aa[overlapping], ab[overlapping])]
    )
    near_contacts = sorted(
        (as_pair(e1, e2), float(s))
        for e1, e2, s in zip(da[near], db[near], separations[near])
    )
    if violations:
        logger.info("%s has %d crossing or overlapping edge pairs", embedding, len(violations))
    return len(violations) == 0, violations, near_contacts


def verify_matchstick(embedding, m=None, n=None, tol=DEFAULT_TOLERANCES):
    """
    Aggregate unit length, non-crossing, connectivity and (m;n) profile
    checks. The profile check is skipped when m and n are None.
    """
    unit_ok, max_abs_deviation = check_unit_lengths(embedding, tol.unit_tol_refined)
    planarity_ok, violations, near_contacts = check_noncrossing(embedding, tol)
    profile = None
    profile_violations = []
    if m is None and n is None:
        profile_ok = True
    else:
        try:
            profile = degree_profile(embedding, m, n)
            profile_ok = True
        except ProfileViolation as e:
            profile_ok = False
            profile_violations = list(e.vertices)
    report = VerificationReport(
        name=embedding.name,
        unit_ok=unit_ok,
        max_abs_deviation=max_abs_deviation,
        planarity_ok=planarity_ok,
        violations=violations,
        near_contacts=near_contacts,
        profile_ok=profile_ok,
        profile=profile,
        profile_violations=profile_violations,
        connected=embedding.is_connected,
    )
    logger.info("Verified %s: %s", embedding, report.summary)
    return report
