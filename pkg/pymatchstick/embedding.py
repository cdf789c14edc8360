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
Contains the Embedding class, the central graph representation: vertex
coordinates in unit-edge lengths plus edges as pairs of vertex ids. Also
defines the .mge text format and degree profiles.
"""

import logging
import math
from os.path import basename, splitext

import numpy as np
from memoized_property import memoized_property
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components
from serializable import Serializable
from typechecks import require_integer, require_string

from .geometry import Point, reflection_matrix, rotation_matrix

logger = logging.getLogger(__name__)


class EmbeddingReadError(ValueError):
    pass


class ProfileViolation(ValueError):
    def __init__(self, message, vertices):
        self.vertices = vertices
        ValueError.__init__(self, message)


def normalize_edge(i, j):
    i = int(i)
    j = int(j)
    return (i, j) if i < j else (j, i)


class Embedding(Serializable):
    """
    Planar drawing of a graph: indexed vertex positions and undirected
    edges. Instances are treated as immutable, every derived quantity is
    computed lazily and cached.
    """

    def __init__(self, vertices, edges, edge_tags=None, name=""):
        """
        Parameters
        ----------
        vertices : list of (x, y) pairs or Points

        edges : list of (i, j) vertex id pairs

        edge_tags : list of str or None, optional
            One label per edge (e.g. "red"), in the same order as `edges`.

        name : str
        """
        vertices = tuple(
            (float(v.x), float(v.y)) if isinstance(v, Point) else (float(v[0]), float(v[1]))
            for v in vertices
        )
        for x, y in vertices:
            if not (math.isfinite(x) and math.isfinite(y)):
                raise ValueError("Expected finite coordinates, got (%s, %s)" % (x, y))
        if edge_tags is None:
            edge_tags = [None] * len(edges)
        if len(edge_tags) != len(edges):
            raise ValueError(
                "Expected %d edge tags, got %d" % (len(edges), len(edge_tags))
            )
        n_vertices = len(vertices)
        tagged_edges = {}
        for (i, j), tag in zip(edges, edge_tags):
            edge = normalize_edge(i, j)
            if edge[0] == edge[1]:
                raise ValueError("Edge (%d, %d) is a loop" % edge)
            if edge[0] < 0 or edge[1] >= n_vertices:
                raise ValueError(
                    "Edge (%d, %d) refers to a vertex outside 0..%d"
                    % (edge[0], edge[1], n_vertices - 1)
                )
            if edge in tagged_edges:
                raise ValueError("Duplicate edge (%d, %d)" % edge)
            tagged_edges[edge] = tag if tag else None
        if n_vertices < 2 or len(tagged_edges) < 1:
            raise ValueError(
                "Expected at least 2 vertices and 1 edge, got %d and %d"
                % (n_vertices, len(tagged_edges))
            )
        self.vertices = vertices
        self.edges = tuple(sorted(tagged_edges))
        self.edge_tags = tuple(tagged_edges[edge] for edge in self.edges)
        self.name = name
        isolated = [v for v, d in enumerate(self.degrees) if d == 0]
        if isolated:
            raise ValueError("Isolated vertices: %s" % (isolated,))

    def __str__(self):
        return "Embedding(name='%s', vertices=%d, edges=%d)" % (
            self.name,
            self.n_vertices,
            self.n_edges,
        )

    def __repr__(self):
        return str(self)

    def __eq__(self, other):
        return (
            other.__class__ is Embedding
            and self.vertices == other.vertices
            and self.edges == other.edges
            and self.edge_tags == other.edge_tags
            and self.name == other.name
        )

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def to_dict(self):
        return {
            "vertices": [list(v) for v in self.vertices],
            "edges": [list(e) for e in self.edges],
            "edge_tags": list(self.edge_tags),
            "name": self.name,
        }

    @property
    def n_vertices(self):
        return len(self.vertices)

    @property
    def n_edges(self):
        return len(self.edges)

    def point(self, vertex):
        return Point(*self.vertices[vertex])

    @memoized_property
    def coordinates(self):
        """
        (V, 2) array of vertex positions.
        """
        array = np.array(self.vertices, dtype=float)
        array.setflags(write=False)
        return array

    @memoized_property
    def edge_array(self):
        """
        (E, 2) integer array of edge endpoints.
        """
        array = np.array(self.edges, dtype=int).reshape(-1, 2)
        array.setflags(write=False)
        return array

    @memoized_property
    def edge_index(self):
        return {edge: index for index, edge in enumerate(self.edges)}

    @memoized_property
    def edge_set(self):
        return frozenset(self.edges)

    @memoized_property
    def adjacency(self):
        neighbors = [[] for _ in range(self.n_vertices)]
        for i, j in self.edges:
            neighbors[i].append(j)
            neighbors[j].append(i)
        return tuple(tuple(sorted(ns)) for ns in neighbors)

    @memoized_property
    def degrees(self):
        counts = [0] * len(self.vertices)
        for i, j in self.edges:
            counts[i] += 1
            counts[j] += 1
        return tuple(counts)

    @memoized_property
    def edge_lengths(self):
        endpoints = self.coordinates[self.edge_array]
        return np.linalg.norm(endpoints[:, 0] - endpoints[:, 1], axis=1)

    @memoized_property
    def is_connected(self):
        return count_components(self.n_vertices, self.edges) == 1

    def has_edge(self, i, j):
        return normalize_edge(i, j) in self.edge_set

    def incident_edges(self, vertex):
        return [normalize_edge(vertex, other) for other in self.adjacency[vertex]]

    def edges_with_tag(self, tag):
        return [e for e, t in zip(self.edges, self.edge_tags) if t and tag in t.split(",")]

    def with_coordinates(self, coordinates, name=None):
        """
        Same combinatorial structure placed at new vertex positions.
        """
        return Embedding(
            vertices=[tuple(p) for p in np.asarray(coordinates, dtype=float)],
            edges=self.edges,
            edge_tags=self.edge_tags,
            name=self.name if name is None else name,
        )

    def transformed(self, rotation_degrees=0.0, translation=(0.0, 0.0), reflect=False, scale=1.0):
        """
        Image under a similarity: optional reflection across the x axis, then
        rotation about the origin, scaling, then translation.
        """
        matrix = rotation_matrix(rotation_degrees)
        if reflect:
            matrix = matrix.dot(reflection_matrix(0.0))
        coordinates = scale * self.coordinates.dot(matrix.T) + np.asarray(translation)
        return self.with_coordinates(coordinates)

    def relabeled(self, permutation):
        """
        Re-index vertices so that old vertex i becomes permutation[i].
        """
        permutation = [int(p) for p in permutation]
        if sorted(permutation) != list(range(self.n_vertices)):
            raise ValueError("Expected a permutation of 0..%d" % (self.n_vertices - 1))
        vertices = [None] * self.n_vertices
        for old, new in enumerate(permutation):
            vertices[new] = self.vertices[old]
        edges = [(permutation[i], permutation[j]) for i, j in self.edges]
        return Embedding(
            vertices=vertices, edges=edges, edge_tags=self.edge_tags, name=self.name
        )

    def without_edge(self, edge):
        """
        Copy with one edge removed, raises ValueError if that isolates a vertex.
        """
        edge = normalize_edge(*edge)
        if edge not in self.edge_set:
            raise ValueError("No edge %s in %s" % (edge, self))
        keep = [k for k, e in enumerate(self.edges) if e != edge]
        return Embedding(
            vertices=self.vertices,
            edges=[self.edges[k] for k in keep],
            edge_tags=[self.edge_tags[k] for k in keep],
            name=self.name,
        )


def count_components(n_vertices, edges):
    """
    Number of connected components of the graph on vertices 0..n_vertices-1,
    isolated vertices counting as components of their own.
    """
    edges = np.asarray(list(edges), dtype=int).reshape(-1, 2)
    graph = coo_matrix(
        (np.ones(len(edges)), (edges[:, 0], edges[:, 1])),
        shape=(n_vertices, n_vertices),
    )
    n_components, _ = connected_components(graph, directed=False)
    return n_components


class DegreeProfile(Serializable):
    """
    Vertex counts of a (m;n)-regular graph.
    """

    def __init__(self, m, n, count_m, count_n):
        self.m = m
        self.n = n
        self.count_m = count_m
        self.count_n = count_n

    def __str__(self):
        return "DegreeProfile(m=%d, n=%d, count_m=%d, count_n=%d)" % (
            self.m,
            self.n,
            self.count_m,
            self.count_n,
        )

    def __eq__(self, other):
        return other.__class__ is DegreeProfile and self.to_tuple() == other.to_tuple()

    def __hash__(self):
        return hash(self.to_tuple())

    def to_tuple(self):
        return (self.m, self.n, self.count_m, self.count_n)

    def to_dict(self):
        return {"m": self.m, "n": self.n, "count_m": self.count_m, "count_n": self.count_n}


def degree_profile(embedding, m, n):
    """
    Count the vertices of degree m and n, raising ProfileViolation if any
    vertex has another degree. For m == n all vertices are counted under m.
    """
    require_integer(m, "m")
    require_integer(n, "n")
    offending = [v for v, d in enumerate(embedding.degrees) if d not in (m, n)]
    if offending:
        raise ProfileViolation(
            "%s is not (%d;%d)-regular, offending vertices %s with degrees %s"
            % (
                embedding,
                m,
                n,
                offending,
                [embedding.degrees[v] for v in offending],
            ),
            vertices=offending,
        )
    count_m = sum(1 for d in embedding.degrees if d == m)
    count_n = embedding.n_vertices - count_m
    return DegreeProfile(m=m, n=n, count_m=count_m, count_n=count_n)


def write_embedding(embedding):
    """
    Serialize to the .mge text format. Coordinates use 17 significant digits
    so that reading the text back reproduces them exactly.
    """
    if "\n" in embedding.name or "\r" in embedding.name:
        raise ValueError("Embedding name %r spans several lines" % embedding.name)
    lines = ["name %s" % embedding.name, "unit 1.0"]
    for vertex, (x, y) in enumerate(embedding.vertices):
        lines.append("v %d %.17g %.17g" % (vertex, x, y))
    for (i, j), tag in zip(embedding.edges, embedding.edge_tags):
        if tag:
            lines.append("e %d %d %s" % (i, j, tag))
        else:
            lines.append("e %d %d" % (i, j))
    return "\n".join(lines) + "\n"


def read_embedding(text, name=None):
    require_string(text, "text")
    vertices = []
    edges = []
    edge_tags = []
    embedding_name = ""
    for line_number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if stripped.split()[0] != "name":
            # names are taken verbatim, "#" included
            stripped = stripped.split("#", 1)[0].strip()
        fields = stripped.split()
        record = fields[0]
        try:
            if record == "name":
                embedding_name = stripped[len("name"):].strip()
            elif record == "unit":
                if float(fields[1]) != 1.0:
                    raise EmbeddingReadError(
                        "line %d: only unit 1.0 is supported" % line_number
                    )
            elif record == "v":
                if len(fields) != 4:
                    raise EmbeddingReadError(
                        "line %d: expected 'v <id> <x> <y>'" % line_number
                    )
                if int(fields[1]) != len(vertices):
                    raise EmbeddingReadError(
                        "line %d: expected vertex id %d, got %s"
                        % (line_number, len(vertices), fields[1])
                    )
                vertices.append((float(fields[2]), float(fields[3])))
            elif record == "e":
                if len(fields) not in (3, 4):
                    raise EmbeddingReadError(
                        "line %d: expected 'e <id1> <id2> [tag]'" % line_number
                    )
                i, j = int(fields[1]), int(fields[2])
                for vertex in (i, j):
                    if vertex < 0 or vertex >= len(vertices):
                        raise EmbeddingReadError(
                            "line %d: edge refers to unknown vertex %d"
                            % (line_number, vertex)
                        )
                edges.append((i, j))
                edge_tags.append(fields[3] if len(fields) == 4 else None)
            else:
                raise EmbeddingReadError(
                    "line %d: unknown record type '%s'" % (line_number, record)
                )
        except (IndexError, ValueError) as e:
            if isinstance(e, EmbeddingReadError):
                raise
            raise EmbeddingReadError("line %d: %s" % (line_number, e))
    try:
        return Embedding(
            vertices=vertices,
            edges=edges,
            edge_tags=edge_tags,
            name=embedding_name if name is None else name,
        )
    except ValueError as e:
        raise EmbeddingReadError(str(e))


def read_embedding_file(path):
    with open(path, "r", encoding="utf-8") as f:
        embedding = read_embedding(f.read())
    if not embedding.name:
        embedding.name = splitext(basename(path))[0]
    return embedding


def write_embedding_file(embedding, path):
    with open(path, "w", encoding="utf-8") as f:
        f.write(write_embedding(embedding))
