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
Raw drawn strokes, read from the .seg text format:

    # comment
    name <text>
    x1 y1 x2 y2 [tag]

Coordinates are kept exactly as listed in a figure (y pointing down), the
flip to the y-up frame happens when an embedding is built.
"""

import logging
import math
from os.path import basename, splitext

import numpy as np
from serializable import Serializable
from typechecks import require_string

from .geometry import DegenerateSegmentError, Segment

logger = logging.getLogger(__name__)


class SegmentParseError(ValueError):
    def __init__(self, message, line_number=None):
        self.line_number = line_number
        if line_number is not None:
            message = "line %d: %s" % (line_number, message)
        ValueError.__init__(self, message)


class SegmentList(Serializable):
    """
    Ordered strokes of one drawing with optional per-stroke tags.
    """

    def __init__(self, segments, tags=None, source_name="", line_numbers=None):
        segments = [s if isinstance(s, Segment) else Segment(*s) for s in segments]
        if len(segments) == 0:
            raise SegmentParseError("Expected at least one segment")
        if tags is None:
            tags = [None] * len(segments)
        if line_numbers is None:
            line_numbers = list(range(1, len(segments) + 1))
        if len(tags) != len(segments) or len(line_numbers) != len(segments):
            raise ValueError(
                "Expected one tag and line number per segment, got %d segments, "
                "%d tags, %d line numbers"
                % (len(segments), len(tags), len(line_numbers))
            )
        self.segments = tuple(segments)
        self.tags = tuple(tags)
        self.source_name = source_name
        self.line_numbers = tuple(int(n) for n in line_numbers)

    def __len__(self):
        return len(self.segments)

    def __iter__(self):
        return iter(self.segments)

    def __str__(self):
        return "SegmentList(source_name='%s', segments=%d)" % (
            self.source_name,
            len(self.segments),
        )

    def __eq__(self, other):
        return (
            other.__class__ is SegmentList
            and self.segments == other.segments
            and self.tags == other.tags
            and self.source_name == other.source_name
        )

    def __hash__(self):
        return hash((self.segments, self.tags, self.source_name))

    def to_dict(self):
        return {
            "segments": list(self.segments),
            "tags": list(self.tags),
            "source_name": self.source_name,
            "line_numbers": list(self.line_numbers),
        }

    @property
    def lengths(self):
        return np.array([s.length for s in self.segments])

    def endpoint_array(self):
        """
        (N, 4) array of x1, y1, x2, y2 per stroke.
        """
        return np.array(
            [(s.a.x, s.a.y, s.b.x, s.b.y) for s in self.segments], dtype=float
        )

    def describe(self, index):
        """
        Human readable reference to a stroke for error messages.
        """
        return "segment %d (line %d of %s)" % (
            index,
            self.line_numbers[index],
            self.source_name or "<input>",
        )

    def permuted(self, order):
        """
        Same strokes in a different order.
        """
        return SegmentList(
            segments=[self.segments[i] for i in order],
            tags=[self.tags[i] for i in order],
            source_name=self.source_name,
            line_numbers=[self.line_numbers[i] for i in order],
        )


def _parse_float(token, line_number):
    try:
        value = float(token)
    except ValueError:
        raise SegmentParseError("Expected a number, got '%s'" % token, line_number)
    if not math.isfinite(value):
        raise SegmentParseError("Expected a finite number, got '%s'" % token, line_number)
    return value


def parse_segments(text, source_name=""):
    """
    Parse the contents of a .seg file into a SegmentList.
    """
    require_string(text, "text")
    segments = []
    tags = []
    line_numbers = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "name":
            source_name = line[len("name"):].strip()
            continue
        if len(fields) not in (4, 5):
            raise SegmentParseError(
                "Expected 'x1 y1 x2 y2 [tag]', got %d fields" % len(fields),
                line_number,
            )
        x1, y1, x2, y2 = [_parse_float(token, line_number) for token in fields[:4]]
        try:
            segments.append(Segment((x1, y1), (x2, y2)))
        except DegenerateSegmentError as e:
            raise SegmentParseError(str(e), line_number)
        tags.append(fields[4] if len(fields) == 5 else None)
        line_numbers.append(line_number)
    if len(segments) == 0:
        raise SegmentParseError("No segments in %s" % (source_name or "input"))
    logger.debug("Parsed %d segments from %s", len(segments), source_name)
    return SegmentList(
        segments=segments,
        tags=tags,
        source_name=source_name,
        line_numbers=line_numbers,
    )


def read_segment_file(path):
    with open(path, "r", encoding="utf-8") as f:
        text = f.read()
    return parse_segments(text, source_name=splitext(basename(path))[0])
