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
Bundled matchstick graphs with the properties their captions and remarks
claim. Stroke data lives in data/<id>.seg next to this module, or in the
directory named by MSG_CATALOG_DIR.
"""

import logging
import os
from os.path import exists, join

from pkg_resources import resource_filename
from serializable import Serializable
from typechecks import require_string

from .angle_fan import CLOCKWISE, angle_fan
from .common import memoize
from .ingestion import build_embedding
from .motifs import Pattern
from .refined_cache import RefinedCache
from .segment_list import parse_segments
from .tolerance_policy import DEFAULT_TOLERANCES

logger = logging.getLogger(__name__)

CATALOG_DIR_ENV_KEY = "MSG_CATALOG_DIR"

MATCHSTICK = "matchstick"
PATTERN = "pattern"
OUTLINE = "outline"
STUB = "stub"
DETAIL = "detail"
KINDS = (MATCHSTICK, PATTERN, OUTLINE, STUB, DETAIL)

KITE = "kite"
TRIPLET_KITE = "triplet-kite"
DOUBLE_KITE = "double-kite"
REVERSE_DOUBLE_KITE = "reverse-double-kite"

# edges of the smallest known (4;n)-regular matchstick graph for each n,
# all of them symmetric except for n = 10 and n = 11
SMALLEST_KNOWN_EDGES = {
    4: 104,
    5: 115,
    6: 117,
    7: 159,
    8: 126,
    9: 273,
    10: 231,
    11: 771,
}
ASYMMETRIC_SMALLEST_KNOWN = (10, 11)

# eleven angles around the degree 11 vertex, starting between the red edges
FIG13_PRINTED_ANGLES = (
    32.362519660072210,
    40.49207000332465,
    25.382433534610843,
    34.890820876760450,
    32.21894760945070,
    34.514335947363630,
    29.108515978283318,
    36.31491131809427,
    29.550687898877964,
    35.065359484316880,
    30.09939768884507,
)


class UnknownCatalogEntry(ValueError):
    pass


class StubEntryError(ValueError):
    def __init__(self, entry):
        self.entry = entry
        ValueError.__init__(
            self,
            "No data in paper source for %s: caption claims %d vertices and %d edges"
            % (entry.entry_id, entry.caption_vertices, entry.caption_edges),
        )


class CatalogEntry(Serializable):
    """
    One figure: where its strokes are stored and what is claimed about it.
    """

    # entries register themselves here in figure order
    _entries = {}

    @classmethod
    def register(
        cls,
        entry_id,
        kind,
        caption_vertices=None,
        caption_edges=None,
        expected=None,
        notes="",
        pattern_name=None,
    ):
        """
        Create a CatalogEntry and make it available to catalog_entry().
        """
        if entry_id in cls._entries:
            raise ValueError("Catalog entry '%s' already registered" % entry_id)
        entry = CatalogEntry(
            entry_id=entry_id,
            kind=kind,
            caption_vertices=caption_vertices,
            caption_edges=caption_edges,
            expected=expected,
            notes=notes,
            pattern_name=pattern_name,
        )
        cls._entries[entry_id] = entry
        return entry

    @classmethod
    def all_registered_ids(cls):
        return list(cls._entries.keys())

    def __init__(
        self,
        entry_id,
        kind,
        caption_vertices=None,
        caption_edges=None,
        expected=None,
        notes="",
        pattern_name=None,
    ):
        """
        Parameters
        ----------
        entry_id : str
            Figure id such as "fig4", also the stem of its .seg file.

        kind : str
            One of "matchstick", "pattern", "outline", "stub", "detail".

        caption_vertices, caption_edges : int, optional
            Counts stated in the caption or text.

        expected : dict, optional
            Claimed properties checked by `report --expect`.

        notes : str

        pattern_name : str, optional
            Building block name for entries of kind "pattern".
        """
        require_string(entry_id, "entry_id")
        if kind not in KINDS:
            raise ValueError("Unknown catalog kind '%s', expected one of %s" % (kind, KINDS))
        self.entry_id = entry_id
        self.kind = kind
        self.caption_vertices = caption_vertices
        self.caption_edges = caption_edges
        self.expected = expected if expected is not None else {}
        self.notes = notes
        self.pattern_name = pattern_name

    @property
    def seg_file(self):
        if self.kind == STUB:
            return None
        return "%s.seg" % self.entry_id

    @property
    def is_stub(self):
        return self.kind == STUB

    @property
    def is_graph(self):
        return self.kind in (MATCHSTICK, PATTERN, DETAIL)

    @property
    def profile(self):
        return self.expected.get("profile")

    @property
    def smallest_known_edges(self):
        """
        Edge count of the smallest known graph with this entry's (4;n)
        profile, None for other profiles.
        """
        profile = self.profile
        if profile is None or profile[0] != 4:
            return None
        return SMALLEST_KNOWN_EDGES.get(profile[1])

    @property
    def smallest_known_is_symmetric(self):
        if self.smallest_known_edges is None:
            return None
        return self.profile[1] not in ASYMMETRIC_SMALLEST_KNOWN

    def __str__(self):
        return "CatalogEntry(entry_id='%s', kind=%s)" % (self.entry_id, self.kind)

    def __repr__(self):
        return str(self)

    def __eq__(self, other):
        return other.__class__ is CatalogEntry and self.entry_id == other.entry_id

    def __hash__(self):
        return hash(self.entry_id)

    def to_dict(self):
        return {"entry_id": self.entry_id}

    @classmethod
    def from_dict(cls, state_dict):
        return cls._entries[state_dict["entry_id"]]


fig1a = CatalogEntry.register(
    "fig1a",
    PATTERN,
    caption_vertices=12,
    caption_edges=21,
    pattern_name=KITE,
    expected={
        "vertices": 12,
        "edges": 21,
        "profile": (2, 4),
        "count_m": 3,
        "rigid": True,
        "isostatic": True,
        "group": "D_1",
        "mirror_count": 1,
        "motifs": {KITE: 1},
    },
    notes="kite, vertical symmetry",
)

fig1b = CatalogEntry.register(
    "fig1b",
    PATTERN,
    caption_vertices=22,
    caption_edges=41,
    pattern_name=TRIPLET_KITE,
    expected={
        "vertices": 22,
        "edges": 41,
        "rigid": True,
        "isostatic": True,
        "motifs": {TRIPLET_KITE: 1},
    },
    notes="triplet kite",
)

fig1c = CatalogEntry.register(
    "fig1c",
    PATTERN,
    caption_vertices=22,
    caption_edges=42,
    pattern_name=DOUBLE_KITE,
    expected={
        "vertices": 22,
        "edges": 42,
        "profile": (2, 4),
        "count_m": 2,
        "rigid": True,
        "motifs": {DOUBLE_KITE: 1, KITE: 2},
    },
    notes="double kite, two kites joined, two vertices of degree 2",
)

fig1d = CatalogEntry.register(
    "fig1d",
    PATTERN,
    caption_vertices=22,
    caption_edges=42,
    pattern_name=REVERSE_DOUBLE_KITE,
    expected={
        "vertices": 22,
        "edges": 42,
        "profile": (2, 4),
        "count_m": 2,
        "rigid": True,
        "motifs": {REVERSE_DOUBLE_KITE: 1},
    },
    notes="reverse double kite, two vertices of degree 2",
)

fig2a = CatalogEntry.register(
    "fig2a",
    MATCHSTICK,
    caption_vertices=63,
    caption_edges=126,
    expected={
        "vertices": 63,
        "edges": 126,
        "profile": (4, 4),
        "rigid": True,
        "group": "C_1",
        "motifs": {KITE: 6},
        "rearranges_to": "fig2b",
    },
    notes="asymmetric, but six kites rearrange into fig2b",
)

fig2b = CatalogEntry.register(
    "fig2b",
    MATCHSTICK,
    caption_vertices=63,
    caption_edges=126,
    expected={
        "vertices": 63,
        "edges": 126,
        "profile": (4, 4),
        "rigid": True,
        "rotation_order": 3,
    },
    notes="rotational symmetry of order 3",
)

fig3a = CatalogEntry.register(
    "fig3a",
    MATCHSTICK,
    caption_vertices=60,
    caption_edges=121,
    expected={
        "vertices": 60,
        "edges": 121,
        "profile": (4, 5),
        "count_n": 2,
        "rigid": True,
        "group": "C_1",
        "outline_point_symmetric": True,
        "outline": "fig3b-outline",
    },
    notes="asymmetric graph with a point symmetric outer shape",
)

fig3b_outline = CatalogEntry.register(
    "fig3b-outline",
    OUTLINE,
    notes="outer shape of fig3a drawn with its long chords, not a matchstick graph",
)

for _entry_id, _n, _vertices, _edges, _count_n, _notes in [
    ("fig4", 4, 66, 132, None, "triplet-kite based"),
    ("fig5", 5, 62, 125, 2, "triplet-kite based, two triplet kites"),
    ("fig6", 6, 63, 128, 2, "v1, triplet-kite based, two triplet kites"),
    ("fig7", 6, 63, 128, 2, "v2, triplet-kite based, two triplet kites"),
    ("fig8", 7, 93, 189, 2, "fusion of the graphs for n=4 and n=5"),
    ("fig9", 8, 87, 176, 1, "kite based, two double kites"),
]:
    _expected = {
        "vertices": _vertices,
        "edges": _edges,
        "profile": (4, _n),
        "rigid": True,
        "group": "C_1",
        "outline_group": "C_1",
    }
    if _count_n is not None:
        _expected["count_n"] = _count_n
    if _n in (5, 6):
        _expected["motifs"] = {TRIPLET_KITE: 2}
    elif _n == 8:
        _expected["motifs"] = {DOUBLE_KITE: 2}
    CatalogEntry.register(
        _entry_id,
        MATCHSTICK,
        caption_vertices=_vertices,
        caption_edges=_edges,
        expected=_expected,
        notes=_notes,
    )

for _entry_id, _n, _vertices, _edges in [
    ("fig10", 9, 136, 277),
    ("fig11", 10, 114, 231),
    ("fig12", 11, 382, 771),
]:
    CatalogEntry.register(
        _entry_id,
        STUB,
        caption_vertices=_vertices,
        caption_edges=_edges,
        expected={"profile": (4, _n)},
        notes="caption only, no coordinates",
    )

fig13 = CatalogEntry.register(
    "fig13",
    DETAIL,
    expected={
        "rigid": True,
        "isostatic": True,
        "all_removals_flexible": True,
        "angle_fan": {
            "degree": 11,
            "tag": "red",
            "orientation": CLOCKWISE,
            "angles": FIG13_PRINTED_ANGLES,
        },
    },
    notes="detail around the right vertex of degree 11 of fig12",
)


def catalog_entries():
    return [CatalogEntry._entries[entry_id] for entry_id in CatalogEntry.all_registered_ids()]


def catalog_entry(entry_id):
    if isinstance(entry_id, CatalogEntry):
        return entry_id
    require_string(entry_id, "entry_id")
    try:
        return CatalogEntry._entries[entry_id]
    except KeyError:
        raise UnknownCatalogEntry(
            "Unknown catalog entry '%s', expected one of %s"
            % (entry_id, ", ".join(CatalogEntry.all_registered_ids()))
        )


def catalog_directory():
    """
    Directory holding the .seg files, MSG_CATALOG_DIR if set.
    """
    return os.environ.get(CATALOG_DIR_ENV_KEY) or resource_filename(__name__, "data")


def segment_path(entry):
    entry = catalog_entry(entry)
    if entry.is_stub:
        raise StubEntryError(entry)
    path = join(catalog_directory(), entry.seg_file)
    if not exists(path):
        raise UnknownCatalogEntry("Missing data file %s for %s" % (path, entry))
    return path


@memoize
def segment_text(entry):
    with open(segment_path(entry), "r", encoding="utf-8") as f:
        return f.read()


def load_segment_list(entry):
    entry = catalog_entry(entry)
    return parse_segments(segment_text(entry), source_name=entry.entry_id)


@memoize
def ingest_entry(entry, tol=DEFAULT_TOLERANCES):
    """
    Embedding built from the entry's strokes, before refinement.
    """
    entry = catalog_entry(entry)
    return build_embedding(load_segment_list(entry), tol, name=entry.entry_id)


@memoize
def refined_entry(entry, tol=DEFAULT_TOLERANCES, max_iter=200):
    """
    RefineResult for a catalog graph, persisted through RefinedCache.
    """
    entry = catalog_entry(entry)
    if not entry.is_graph:
        raise ValueError("%s is not a graph" % entry)
    return RefinedCache().get_or_refine(
        entry.entry_id, segment_text(entry), tol=tol, max_iter=max_iter
    )


def outline_cycle_length(entry, tol=DEFAULT_TOLERANCES):
    """
    Number of boundary strokes of an outline drawing: the strokes as long as
    the shortest one. The remaining strokes are chords.
    """
    entry = catalog_entry(entry)
    if entry.kind != OUTLINE:
        raise ValueError("%s is not an outline" % entry)
    lengths = load_segment_list(entry).lengths
    return int(sum(lengths <= lengths.min() * (1.0 + tol.unit_tol_raw)))


def pattern_entries():
    return [entry for entry in catalog_entries() if entry.kind == PATTERN]


@memoize
def bundled_patterns(tol=DEFAULT_TOLERANCES):
    """
    The four rigid building blocks from their refined drawings.
    """
    return [
        Pattern.from_embedding(entry.pattern_name, refined_entry(entry, tol).embedding, tol)
        for entry in pattern_entries()
    ]


def designated_fan(entry, embedding):
    """
    (vertex, start_edge, orientation) of the angle fan an entry designates:
    the vertex of the given degree and, of the two tagged edges at it, the
    one from which the other lies less than half a turn away in the given
    orientation.
    """
    entry = catalog_entry(entry)
    fan = entry.expected.get("angle_fan")
    if fan is None:
        return None
    candidates = [v for v, d in enumerate(embedding.degrees) if d == fan["degree"]]
    if len(candidates) != 1:
        raise ValueError(
            "Expected one vertex of degree %d in %s, found %d"
            % (fan["degree"], embedding, len(candidates))
        )
    vertex = candidates[0]
    tagged = [e for e in embedding.edges_with_tag(fan["tag"]) if vertex in e]
    if len(tagged) != 2:
        raise ValueError(
            "Expected two '%s' edges at vertex %d of %s, found %d"
            % (fan["tag"], vertex, embedding, len(tagged))
        )
    for start, other in (tagged, tagged[::-1]):
        angles = angle_fan(embedding, vertex, start, fan["orientation"])
        other_vertex = other[0] if other[1] == vertex else other[1]
        position = angles.neighbors.index(other_vertex)
        if sum(angles.angles[:position]) < 180.0:
            return vertex, start, fan["orientation"]
    raise ValueError("Tagged edges at vertex %d of %s are opposite" % (vertex, embedding))
