import math
import os

from pymatchstick import Embedding

SQRT3_2 = math.sqrt(3.0) / 2.0


def data_path(name):
    """
    Return the absolute path to a file in the tests/data directory.
    """
    return os.path.join(os.path.dirname(__file__), "data", name)


unit_triangle = Embedding(
    vertices=[(0.0, 0.0), (1.0, 0.0), (0.5, SQRT3_2)],
    edges=[(0, 1), (1, 2), (0, 2)],
    name="triangle",
)

# flexible 4-cycle, one internal degree of freedom
unit_square = Embedding(
    vertices=[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)],
    edges=[(0, 1), (1, 2), (2, 3), (0, 3)],
    name="square",
)

# unit rhombus with its short diagonal, two triangles sharing an edge
unit_rhombus = Embedding(
    vertices=[(0.0, 0.0), (1.0, 0.0), (0.5, SQRT3_2), (1.5, SQRT3_2)],
    edges=[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)],
    name="rhombus",
)

hexagon_cycle = Embedding(
    vertices=[
        (math.cos(math.radians(60 * k)), math.sin(math.radians(60 * k))) for k in range(6)
    ],
    edges=[(k, (k + 1) % 6) for k in range(6)],
    name="hexagon",
)

# hexagon with center and spokes: 7 vertices, 12 edges, one redundant edge
hexagon_wheel = Embedding(
    vertices=[(0.0, 0.0)]
    + [(math.cos(math.radians(60 * k)), math.sin(math.radians(60 * k))) for k in range(6)],
    edges=[(0, k + 1) for k in range(6)] + [(k + 1, (k + 1) % 6 + 1) for k in range(6)],
    name="wheel",
)


def triangle_strip(n_vertices):
    """
    Row of equilateral triangles with n_vertices vertices and
    2 * n_vertices - 3 edges, alternating between y = 0 and y = sqrt(3)/2.
    """
    vertices = [
        (0.5 * k, SQRT3_2 if k % 2 else 0.0) for k in range(n_vertices)
    ]
    edges = [(k, k + 1) for k in range(n_vertices - 1)]
    edges += [(k, k + 2) for k in range(n_vertices - 2)]
    return Embedding(vertices=vertices, edges=edges, name="strip%d" % n_vertices)


def segment_text_for(embedding, scale=50.0):
    """
    Stroke file text drawing every edge of an embedding, y pointing down.
    """
    lines = ["# %s" % embedding.name]
    for i, j in embedding.edges:
        (x1, y1), (x2, y2) = embedding.vertices[i], embedding.vertices[j]
        lines.append(
            "%.9f %.9f %.9f %.9f" % (scale * x1, -scale * y1, scale * x2, -scale * y2)
        )
    return "\n".join(lines) + "\n"
