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
SVG drawings of embeddings in unit-edge coordinates. The y axis points
down in SVG, which matches the orientation of the printed figures.
"""

import logging

import drawsvg as draw
from drawsvg.elements import DrawingBasicElement

logger = logging.getLogger(__name__)

VERTEX_RADIUS = 0.03
EDGE_WIDTH = 0.015
MARGIN_FRACTION = 0.05
PIXELS_PER_UNIT = 100.0

EDGE_COLOR = "black"
VERTEX_COLOR = "black"
HIGHLIGHT_COLOR = "#1f77b4"
TAG_COLORS = {"red": "red"}

COORDINATE_DECIMALS = 6


class SegmentLine(DrawingBasicElement):
    """
    Plain <line> element.
    """

    TAG_NAME = "line"

    def __init__(self, x1, y1, x2, y2, **kwargs):
        super().__init__(x1=x1, y1=y1, x2=x2, y2=y2, **kwargs)


def _edge_color(tag):
    if tag:
        for name in tag.split(","):
            if name in TAG_COLORS:
                return TAG_COLORS[name]
    return EDGE_COLOR


def _svg_point(x, y):
    return round(x, COORDINATE_DECIMALS), round(-y, COORDINATE_DECIMALS)


def render_svg(embedding, highlight_degree=None, pixels_per_unit=PIXELS_PER_UNIT):
    """
    Returns an SVG document drawing every edge as a line and every vertex
    as a dot. Edges tagged "red" are stroked red; vertices whose degree is
    `highlight_degree` are filled with HIGHLIGHT_COLOR and drawn larger.
    """
    points = [_svg_point(x, y) for x, y in embedding.vertices]
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    width = max(xs) - min(xs)
    height = max(ys) - min(ys)
    margin = MARGIN_FRACTION * max(width, height) + VERTEX_RADIUS
    drawing = draw.Drawing(
        round(width + 2 * margin, COORDINATE_DECIMALS),
        round(height + 2 * margin, COORDINATE_DECIMALS),
        origin=(
            round(min(xs) - margin, COORDINATE_DECIMALS),
            round(min(ys) - margin, COORDINATE_DECIMALS),
        ),
    )
    drawing.set_pixel_scale(pixels_per_unit)
    for (i, j), tag in zip(embedding.edges, embedding.edge_tags):
        drawing.append(
            SegmentLine(
                points[i][0],
                points[i][1],
                points[j][0],
                points[j][1],
                stroke=_edge_color(tag),
                stroke_width=EDGE_WIDTH,
                stroke_linecap="round",
            )
        )
    for vertex, (x, y) in enumerate(points):
        highlighted = highlight_degree is not None and (
            embedding.degrees[vertex] == highlight_degree
        )
        drawing.append(
            draw.Circle(
                x,
                y,
                2 * VERTEX_RADIUS if highlighted else VERTEX_RADIUS,
                fill=HIGHLIGHT_COLOR if highlighted else VERTEX_COLOR,
            )
        )
    return drawing.as_svg()


def write_svg(embedding, path, highlight_degree=None, pixels_per_unit=PIXELS_PER_UNIT):
    svg = render_svg(
        embedding, highlight_degree=highlight_degree, pixels_per_unit=pixels_per_unit
    )
    with open(path, "w", encoding="utf-8") as f:
        f.write(svg)
    logger.info("Wrote %s to %s", embedding, path)
    return path
