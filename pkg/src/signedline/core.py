"""Signed graphs, drawings, and the classical balance/cluster tests.

A signed graph partitions its edges into positive (friend) and negative
(enemy) pairs.  A drawing places the vertices in Euclidean space; it is
*valid* when it is injective and every vertex lies strictly closer to each
of its positive neighbors than to any of its negative neighbors.

Distance comparisons go through squared norms, so drawings with exact
rational coordinates get exact verdicts.  Float coordinates are compared
with plain strict ``<`` and no epsilon: an epsilon would change which
drawings count as valid.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional, Sequence

Coord = "int | Fraction | float"
Edge = "tuple[int, int]"


def _canon(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _check_edge_set(edges: frozenset, n: int, kind: str) -> None:
    try:
        if all(0 <= u < v < n for u, v in edges):
            return
    except (TypeError, ValueError):
        pass
    for e in edges:
        if not (isinstance(e, tuple) and len(e) == 2):
            raise ValueError(f"{kind} edge {e!r} is not a vertex pair")
        u, v = e
        if u == v:
            raise ValueError(f"self-loop {e} in {kind} edges")
        if not (0 <= u < v < n):
            raise ValueError(f"{kind} edge {e} out of range or not canonical for n={n}")
    raise AssertionError("unreachable")


@dataclass(frozen=True)
class SignedGraph:
    """Vertices 0..n-1 with disjoint sets of positive and negative edges.

    Edges are canonical ``(u, v)`` pairs with ``u < v``.  Use
    :meth:`from_edges` to build from arbitrarily oriented pairs.
    """

    n: int
    pos_edges: frozenset
    neg_edges: frozenset

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        _check_edge_set(self.pos_edges, self.n, "positive")
        _check_edge_set(self.neg_edges, self.n, "negative")
        overlap = self.pos_edges & self.neg_edges
        if overlap:
            raise ValueError(f"edges with both signs: {sorted(overlap)}")

    @classmethod
    def from_edges(cls, n: int, pos: Iterable = (), neg: Iterable = ()) -> "SignedGraph":
        return cls(
            n,
            frozenset((u, v) if u < v else (v, u) for u, v in pos),
            frozenset((u, v) if u < v else (v, u) for u, v in neg),
        )

    @cached_property
    def _adjacency(self) -> tuple[tuple, tuple]:
        pos = [[] for _ in range(self.n)]
        neg = [[] for _ in range(self.n)]
        for u, v in self.pos_edges:
            pos[u].append(v)
            pos[v].append(u)
        for u, v in self.neg_edges:
            neg[u].append(v)
            neg[v].append(u)
        for a in pos:
            a.sort()
        for a in neg:
            a.sort()
        return tuple(map(tuple, pos)), tuple(map(tuple, neg))

    def pos_neighbors(self, v: int) -> tuple:
        return self._adjacency[0][v]

    def neg_neighbors(self, v: int) -> tuple:
        return self._adjacency[1][v]

    def sign(self, u: int, v: int) -> int:
        """+1, -1, or 0 for positive, negative, or absent edge."""
        e = _canon(u, v)
        if e in self.pos_edges:
            return 1
        if e in self.neg_edges:
            return -1
        return 0

    @property
    def edge_count(self) -> int:
        return len(self.pos_edges) + len(self.neg_edges)

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def missing_pair(self) -> Optional[tuple[int, int]]:
        """Some unconnected vertex pair, or None when the graph is complete."""
        if self.is_complete():
            return None
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if self.sign(u, v) == 0:
                    return (u, v)
        return None

    def induced(self, keep: Iterable) -> "SignedGraph":
        """Induced subgraph on `keep`, relabeled 0.. in sorted vertex order."""
        kept = sorted(set(keep))
        if kept and not (0 <= kept[0] and kept[-1] < self.n):
            raise ValueError("induced vertex out of range")
        index = {v: i for i, v in enumerate(kept)}
        pos = [(index[u], index[v]) for u, v in self.pos_edges if u in index and v in index]
        neg = [(index[u], index[v]) for u, v in self.neg_edges if u in index and v in index]
        return SignedGraph.from_edges(len(kept), pos, neg)


@dataclass(frozen=True)
class Graph:
    """Plain undirected graph (used for the positive part of a signed graph)."""

    n: int
    edges: frozenset

    def __post_init__(self):
        _check_edge_set(self.edges, self.n, "graph")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "Graph":
        return cls(n, frozenset(_canon(*e) for e in edges))

    @cached_property
    def adjacency_lists(self) -> tuple:
        """Neighbor tuples per vertex, for fast iteration."""
        lists = [[] for _ in range(self.n)]
        for u, v in self.edges:
            lists[u].append(v)
            lists[v].append(u)
        return tuple(map(tuple, lists))

    @cached_property
    def adjacency(self) -> tuple:
        """Neighbor sets per vertex, for membership tests."""
        return tuple(map(set, self.adjacency_lists))

    def components(self) -> list:
        """Connected components as sorted vertex lists, ordered by smallest member."""
        adj = self.adjacency_lists
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            stack, comp = [s], []
            seen[s] = True
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps


@dataclass(frozen=True)
class Drawing:
    """Per-vertex coordinates in `dim` dimensions.

    Coordinates may be exact (int/Fraction) or float.  Injectivity is not
    enforced here; `check_valid` reports coincident points as a validity
    failure rather than an error.
    """

    dim: int
    points: tuple

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be >= 1")
        for p in self.points:
            if len(p) != self.dim:
                raise ValueError(f"point {p} does not have {self.dim} coordinates")

    @classmethod
    def line(cls, positions: Sequence) -> "Drawing":
        return cls(1, tuple((x,) for x in positions))

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def is_exact(self) -> bool:
        return all(not isinstance(c, float) for p in self.points for c in p)

    def position(self, v: int):
        """1-D convenience accessor."""
        if self.dim != 1:
            raise ValueError("position() is only for 1-D drawings")
        return self.points[v][0]


@dataclass(frozen=True)
class VertexOrdering:
    """Left-to-right order of vertices: order[r] is the vertex at rank r."""

    order: tuple

    def __post_init__(self):
        if sorted(self.order) != list(range(len(self.order))):
            raise ValueError("ordering is not a permutation of 0..n-1")

    @cached_property
    def rank(self) -> tuple:
        rank = [0] * len(self.order)
        for r, v in enumerate(self.order):
            rank[v] = r
        return tuple(rank)

    def __len__(self) -> int:
        return len(self.order)

    def reversed(self) -> "VertexOrdering":
        return VertexOrdering(tuple(reversed(self.order)))


@dataclass(frozen=True)
class Clustering:
    """Per-vertex cluster labels, contiguous from 0."""

    labels: tuple

    def __post_init__(self):
        if self.labels:
            used = set(self.labels)
            if used != set(range(len(used))):
                raise ValueError("cluster labels must be contiguous from 0")

    @property
    def n_clusters(self) -> int:
        return len(set(self.labels))

    def members(self) -> list:
        out = [[] for _ in range(self.n_clusters)]
        for v, c in enumerate(self.labels):
            out[c].append(v)
        return out


@dataclass(frozen=True)
class ValidityReport:
    """Outcome of `check_valid`.

    `violations` holds triples (i, j, k): vertex i with positive neighbor j
    not strictly closer than negative neighbor k.  `coincident` holds vertex
    pairs mapped to the same point (the drawing must be injective).
    """

    valid: bool
    violations: tuple = ()
    coincident: tuple = ()


def squared_distance(p, q):
    return sum((a - b) * (a - b) for a, b in zip(p, q))


def check_valid(g: SignedGraph, d: Drawing) -> ValidityReport:
    """Check the closer-to-positive-than-negative condition at every vertex.

    Exact coordinates give an exact verdict; float coordinates are compared
    with strict `<` and no tolerance.
    """
    if d.n != g.n:
        raise ValueError(f"drawing has {d.n} points for {g.n} vertices")

    coincident = []
    seen = {}
    for v, p in enumerate(d.points):
        if p in seen:
            coincident.append((seen[p], v))
        else:
            seen[p] = v

    dist2 = {}

    def d2(u, v):
        key = _canon(u, v)
        if key not in dist2:
            dist2[key] = squared_distance(d.points[u], d.points[v])
        return dist2[key]

    violations = []
    for i in range(g.n):
        friends = g.pos_neighbors(i)
        enemies = g.neg_neighbors(i)
        if not friends or not enemies:
            continue
        for j in friends:
            dj = d2(i, j)
            for k in enemies:
                if not dj < d2(i, k):
                    violations.append((i, j, k))

    return ValidityReport(
        valid=not violations and not coincident,
        violations=tuple(violations),
        coincident=tuple(coincident),
    )


def is_balanced(g: SignedGraph) -> Optional[tuple]:
    """Two-coloring with positive edges inside classes and negative across.

    Returns per-vertex labels in {0, 1} when such a split exists, else None.
    Sign propagation by depth-first search; an isolated or all-consistent
    component keeps color 0 for its lowest vertex.
    """
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.pos_neighbors(v):
                if color[w] == -1:
                    color[w] = color[v]
                    stack.append(w)
                elif color[w] != color[v]:
                    return None
            for w in g.neg_neighbors(v):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    return tuple(color)


def is_clusterizable(g: SignedGraph) -> Optional[Clustering]:
    """Partition with positive edges inside parts and negative across.

    The candidate partition is forced: connected components of the positive
    subgraph.  It works iff no negative edge stays inside a component.
    """
    comps = positive_graph(g).components()
    label = [0] * g.n
    for c, comp in enumerate(comps):
        for v in comp:
            label[v] = c
    for u, v in g.neg_edges:
        if label[u] == label[v]:
            return None
    return Clustering(tuple(label))


def cluster_drawing(g: SignedGraph, c: Clustering) -> Drawing:
    """1-D drawing placing cluster i inside [3i, 3i+1], members evenly spaced.

    Cluster intervals have length 1 and gaps 2, so positive edges (inside a
    cluster) are shorter than every negative edge (between clusters).
    """
    if len(c.labels) != g.n:
        raise ValueError("clustering size does not match graph")
    for u, v in g.pos_edges:
        if c.labels[u] != c.labels[v]:
            raise ValueError(f"positive edge {(u, v)} crosses clusters")
    for u, v in g.neg_edges:
        if c.labels[u] == c.labels[v]:
            raise ValueError(f"negative edge {(u, v)} inside a cluster")

    positions = [Fraction(0)] * g.n
    for ci, members in enumerate(c.members()):
        base = Fraction(3 * ci)
        m = len(members)
        for idx, v in enumerate(members):
            positions[v] = base if m == 1 else base + Fraction(idx, m - 1)
    return Drawing.line(positions)


def positive_graph(g: SignedGraph) -> Graph:
    """The unsigned graph keeping only positive edges."""
    # The edge set was validated when g was built; skip the O(m) re-check.
    h = object.__new__(Graph)
    object.__setattr__(h, "n", g.n)
    object.__setattr__(h, "edges", g.pos_edges)
    return h
