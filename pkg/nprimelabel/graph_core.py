"""
Graph and labeling types, plus the neighborhood-prime verifier.

Vertices are 1-based and labels share the range {1..n}, so every formula in
`families` and `labelers` can be written exactly as stated for the graph family.
"""

import math
from dataclasses import dataclass, field

import networkx as nx

from nprimelabel.errors import LabelingInvalid, UsageError


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 1..vertex_count."""

    vertex_count: int
    edges: frozenset
    adjacency: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.vertex_count < 1:
            raise UsageError(f"a graph needs at least one vertex, got {self.vertex_count}")
        neighbors = [[] for _ in range(self.vertex_count + 1)]
        for u, v in self.edges:
            if not 1 <= u < v <= self.vertex_count:
                raise UsageError(f"edge ({u}, {v}) is not a pair 1 <= u < v <= {self.vertex_count}")
            neighbors[u].append(v)
            neighbors[v].append(u)
        # index 0 is unused so that adjacency[v] is vertex v's neighbor list
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in neighbors))

    @classmethod
    def from_edges(cls, vertex_count, edges):
        """Build a graph from (u, v) pairs in any orientation; rejects loops and repeats."""
        normalized = set()
        for u, v in edges:
            if u == v:
                raise UsageError(f"self-loop at vertex {u}")
            pair = (u, v) if u < v else (v, u)
            if pair in normalized:
                raise UsageError(f"duplicate edge {pair}")
            normalized.add(pair)
        return cls(vertex_count, frozenset(normalized))

    @property
    def edge_count(self):
        return len(self.edges)

    def degree(self, v):
        return len(self.adjacency[_checked_vertex(self, v)])

    def sorted_edges(self):
        return sorted(self.edges)

    def to_networkx(self):
        g = nx.Graph()
        g.add_nodes_from(range(1, self.vertex_count + 1))
        g.add_edges_from(self.edges)
        return g


@dataclass(frozen=True)
class Labeling:
    """Bijection from vertices 1..n onto {1..n}; labels[v - 1] is the label of vertex v."""

    labels: tuple

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if sorted(labels) != list(range(1, len(labels) + 1)):
            raise LabelingInvalid(f"labels are not a bijection onto 1..{len(labels)}: {labels}")

    def __len__(self):
        return len(self.labels)

    def __getitem__(self, v):
        return self.labels[v - 1]

    def vertex_with(self, label):
        return self.labels.index(label) + 1


@dataclass(frozen=True)
class Violation:
    vertex: int
    neighbor_labels: tuple
    gcd_value: int


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    violations: tuple
    checked_count: int


def gcd_of(values):
    values = list(values)
    if not values:
        raise UsageError("gcd_of needs at least one value")
    if any(x < 1 for x in values):
        raise UsageError(f"gcd_of takes positive integers, got {values}")
    return math.gcd(*values)


def neighborhood(g, v):
    return list(g.adjacency[_checked_vertex(g, v)])


def as_labeling(f):
    return f if isinstance(f, Labeling) else Labeling(tuple(f))


def verify(g, f):
    """Audit every vertex of degree >= 2; all violations are reported, not just the first."""
    f = as_labeling(f)
    if len(f) != g.vertex_count:
        raise UsageError(
            f"labeling has {len(f)} entries but the graph has {g.vertex_count} vertices"
        )

    violations = []
    checked = 0
    for v in range(1, g.vertex_count + 1):
        nbrs = g.adjacency[v]
        if len(nbrs) < 2:
            continue
        checked += 1
        neighbor_labels = tuple(sorted(f[u] for u in nbrs))
        value = math.gcd(*neighbor_labels)
        if value != 1:
            violations.append(Violation(v, neighbor_labels, value))

    return VerificationReport(not violations, tuple(violations), checked)


def is_tree(g):
    return g.edge_count == g.vertex_count - 1 and nx.is_connected(g.to_networkx())


def attach_pendant(g, v):
    """Return g plus a new leaf n+1 adjacent to v."""
    v = _checked_vertex(g, v)
    return Graph(g.vertex_count + 1, g.edges | {(v, g.vertex_count + 1)})


def contract_vertices(g, u1, u2):
    """
    Merge u1 and u2 into one vertex whose neighborhood is N(u1) | N(u2).

    The merged vertex takes u1's place; vertex ids above u2 shift down by one so the
    result is again numbered 1..n-1.
    """
    u1, u2 = _checked_vertex(g, u1), _checked_vertex(g, u2)
    if u1 == u2:
        raise UsageError("cannot contract a vertex with itself")
    if (min(u1, u2), max(u1, u2)) in g.edges:
        raise UsageError(f"vertices {u1} and {u2} are adjacent")

    def renumber(x):
        if x == u2:
            x = u1
        return x - 1 if x > u2 else x

    edges = {tuple(sorted((renumber(a), renumber(b)))) for a, b in g.edges}
    return Graph(g.vertex_count - 1, frozenset(edges))


def _checked_vertex(g, v):
    if not 1 <= v <= g.vertex_count:
        raise UsageError(f"vertex {v} is out of range 1..{g.vertex_count}")
    return v
