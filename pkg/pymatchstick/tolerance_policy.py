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

import math

from serializable import Serializable


class TolerancePolicy(Serializable):
    """
    Numeric thresholds used by ingestion, verification, rigidity and
    symmetry detection. Lengths are in unit-edge lengths unless noted.
    """

    def __init__(
        self,
        snap_tol=1e-3,
        unit_tol_raw=5e-2,
        unit_tol_refined=1e-9,
        rank_tol=1e-8,
        sep_warn=1e-3,
        sep_fail=1e-9,
        angle_tol=1e-6,
    ):
        """
        Parameters
        ----------
        snap_tol : float
            Radius within which drawn endpoints are merged into one vertex,
            also the matching radius for symmetries and motifs.

        unit_tol_raw : float
            Relative tolerance on edge lengths of unrefined input.

        unit_tol_refined : float
            Absolute tolerance on |length - 1| after refinement.

        rank_tol : float
            Singular values below rank_tol * largest singular value count
            as zero.

        sep_warn : float
            Separations of non-adjacent edges at or below this are reported
            as near contacts.

        sep_fail : float
            Separations at or below this count as intersections.

        angle_tol : float
            Minimum angle in degrees between two edges sharing a vertex.
        """
        self.snap_tol = float(snap_tol)
        self.unit_tol_raw = float(unit_tol_raw)
        self.unit_tol_refined = float(unit_tol_refined)
        self.rank_tol = float(rank_tol)
        self.sep_warn = float(sep_warn)
        self.sep_fail = float(sep_fail)
        self.angle_tol = float(angle_tol)
        self._check()

    def _check(self):
        for name, value in self._fields():
            if not (math.isfinite(value) and value > 0):
                raise ValueError("Tolerance %s must be positive, got %s" % (name, value))
        if not self.sep_fail < self.sep_warn:
            raise ValueError(
                "Expected sep_fail < sep_warn, got sep_fail=%s, sep_warn=%s"
                % (self.sep_fail, self.sep_warn)
            )
        if not self.unit_tol_refined < self.unit_tol_raw:
            raise ValueError(
                "Expected unit_tol_refined < unit_tol_raw, got %s and %s"
                % (self.unit_tol_refined, self.unit_tol_raw)
            )

    def _fields(self):
        return (
            ("snap_tol", self.snap_tol),
            ("unit_tol_raw", self.unit_tol_raw),
            ("unit_tol_refined", self.unit_tol_refined),
            ("rank_tol", self.rank_tol),
            ("sep_warn", self.sep_warn),
            ("sep_fail", self.sep_fail),
            ("angle_tol", self.angle_tol),
        )

    def __eq__(self, other):
        return other.__class__ is TolerancePolicy and self._fields() == other._fields()

    def __hash__(self):
        return hash(self._fields())

    def __str__(self):
        return "TolerancePolicy(%s)" % ", ".join("%s=%g" % kv for kv in self._fields())

    def to_dict(self):
        return dict(self._fields())

    def with_overrides(self, **overrides):
        """
        Copy of this policy with any non-None keyword overrides applied.
        """
        fields = self.to_dict()
        for key, value in overrides.items():
            if key not in fields:
                raise ValueError("Unknown tolerance '%s'" % key)
            if value is not None:
                fields[key] = value
        return TolerancePolicy(**fields)

    @property
    def symmetry_angle_tol(self):
        """
        Angle in degrees turning a unit edge's far endpoint by snap_tol.
        """
        return math.degrees(self.snap_tol)


DEFAULT_TOLERANCES = TolerancePolicy()
