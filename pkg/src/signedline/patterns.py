"""Named forbidden-pattern families: generators, detection, minimality.

The line families (no valid 1-D drawing, each minimal):

  f1:n,k       positive n-cycle, negative chords between vertices at cycle
               distance exactly k, 2 <= k <= n/2 ("f1:4,2" is the square
               with positive sides and negative diagonals)
  f2:n         negative n-cycle plus a hub joined positively to every
               cycle vertex (non-drawable for odd n)
  f3:n         positive n-cycle; each cycle vertex gets a positive pendant
               that is negative to the two adjacent cycle vertices
               (2n vertices, 2n positive edges, 2n negative edges)
  f4:n         like f3 with pendant signs flipped: pendant negative to its
               mate, positive to the mate's cycle neighbors
               (2n vertices, 3n positive edges, n negative edges)

The plane pair (no valid 2-D drawing, each minimal):

  neg-triangle five vertices: a negative triangle, a separate negative
               pair, all remaining pairs positive
  neg-cluster  a negative clique on six vertices plus a hub joined
               positively to all six

And cycle-k:n,k, the positive Hamiltonian cycle with negative chords
(i, i+k mod n) for 1 < k < n-1, generalizing f1 past k = n/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .core import Drawing, SignedGraph, check_valid
from .oracle import decide_line_bruteforce

_KINDS = {
    "f1": 2,
    "f2": 1,
    "f3": 1,
    "f4": 1,
    "neg-triangle": 0,
    "neg-cluster": 0,
    "cycle-k": 2,
}


@dataclass(frozen=True)
class PatternId:
    kind: str
    params: tuple = ()

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown pattern kind {self.kind!r}")
        if len(self.params) != _KINDS[self.kind]:
            raise ValueError(
                f"{self.kind} takes {_KINDS[self.kind]} parameter(s), got {self.params}"
            )
        if any(not isinstance(p, int) for p in self.params):
            raise ValueError("pattern parameters must be integers")
        if self.kind == "f1":
            n, k = self.params
            if not (2 <= k and 2 * k <= n):
                raise ValueError(f"f1 needs 2 <= k <= n/2, got n={n}, k={k}")
        elif self.kind in ("f2", "f3", "f4"):
            (n,) = self.params
            if n < 3:
                raise ValueError(f"{self.kind} needs a cycle of length >= 3")
        elif self.kind == "cycle-k":
            n, k = self.params
            if not (1 < k < n - 1):
                raise ValueError(f"cycle-k needs 1 < k < n-1, got n={n}, k={k}")

    def __str__(self) -> str:
        if not self.params:
            return self.kind
        return self.kind + ":" + ",".join(map(str, self.params))


def parse_pattern(text: str) -> PatternId:
    """Parse CLI pattern names like "f1:4,2" or "neg-cluster"."""
    kind, sep, rest = text.strip().partition(":")
    if kind not in _KINDS:
        raise ValueError(f"unknown pattern {text!r}")
    if not sep:
        return PatternId(kind)
    try:
        params = tuple(int(p) for p in rest.split(","))
    except ValueError:
        raise ValueError(f"bad parameters in pattern {text!r}") from None
    return PatternId(kind, params)


def generate(p: PatternId) -> SignedGraph:
    if p.kind == "f1":
        n, k = p.params
        pos = [(i, (i + 1) % n) for i in range(n)]
        neg = [(i, (i + k) % n) for i in range(n)]
        return SignedGraph.from_edges(n, pos, neg)
    if p.kind == "f2":
        (n,) = p.params
        pos = [(i, n) for i in range(n)]
        neg = [(i, (i + 1) % n) for i in range(n)]
        return SignedGraph.from_edges(n + 1, pos, neg)
    if p.kind == "f3":
        (n,) = p.params
        pos = [(i, (i + 1) % n) for i in range(n)] + [(i, n + i) for i in range(n)]
        neg = [(n + i, (i - 1) % n) for i in range(n)]
        neg += [(n + i, (i + 1) % n) for i in range(n)]
        return SignedGraph.from_edges(2 * n, pos, neg)
    if p.kind == "f4":
        (n,) = p.params
        pos = [(i, (i + 1) % n) for i in range(n)]
        pos += [(n + i, (i - 1) % n) for i in range(n)]
        pos += [(n + i, (i + 1) % n) for i in range(n)]
        neg = [(i, n + i) for i in range(n)]
        return SignedGraph.from_edges(2 * n, pos, neg)
    if p.kind == "neg-triangle":
        neg = [(0, 1), (0, 2), (1, 2), (3, 4)]
        pos = [(i, j) for i in range(3) for j in (3, 4)]
        return SignedGraph.from_edges(5, pos, neg)
    if p.kind == "neg-cluster":
        neg = [(i, j) for i in range(6) for j in range(i + 1, 6)]
        pos = [(i, 6) for i in range(6)]
        return SignedGraph.from_edges(7, pos, neg)
    if p.kind == "cycle-k":
        n, k = p.params
        pos = [(i, (i + 1) % n) for i in range(n)]
        neg = [(i, (i + k) % n) for i in range(n)]
        return SignedGraph.from_edges(n, pos, neg)
    raise AssertionError(p.kind)


@dataclass(frozen=True)
class PatternMatch:
    """Injective map: pattern vertex i sits at host vertex mapping[i]."""

    mapping: tuple


def find_induced(host: SignedGraph, p: PatternId) -> Optional[PatternMatch]:
    """Search for an induced copy of the pattern, signs and non-edges alike.

    Backtracking over pattern vertices in index order, host candidates in
    ascending order (so the returned match is lexicographically first),
    pruned by signed-degree counts.  Meant for the small fixed patterns
    above, not as a general subgraph-isomorphism engine.
    """
    pat = generate(p)
    if pat.n > host.n:
        return None

    host_pos_deg = [len(host.pos_neighbors(v)) for v in range(host.n)]
    host_neg_deg = [len(host.neg_neighbors(v)) for v in range(host.n)]
    pat_pos_deg = [len(pat.pos_neighbors(v)) for v in range(pat.n)]
    pat_neg_deg = [len(pat.neg_neighbors(v)) for v in range(pat.n)]

    assigned = []
    used = set()

    def extend(pv: int) -> bool:
        if pv == pat.n:
            return True
        for hv in range(host.n):
            if hv in used:
                continue
            if host_pos_deg[hv] < pat_pos_deg[pv] or host_neg_deg[hv] < pat_neg_deg[pv]:
                continue
            if any(host.sign(hv, assigned[q]) != pat.sign(pv, q) for q in range(pv)):
                continue
            assigned.append(hv)
            used.add(hv)
            if extend(pv + 1):
                return True
            assigned.pop()
            used.remove(hv)
        return False

    if extend(0):
        return PatternMatch(tuple(assigned))
    return None


def verify_minimal_line(g: SignedGraph, limit: Optional[int] = None) -> bool:
    """Is a line-non-drawable graph minimal (every vertex deletion drawable)?

    Single-vertex deletions suffice: non-drawability of a deeper induced
    subgraph would propagate up to the one-deletion subgraph containing it.
    Raises if g itself is drawable.  Sized for the brute-force oracle.
    """
    if decide_line_bruteforce(g, limit).drawable:
        raise ValueError("graph has a valid line drawing; minimality is moot")
    keep_all = range(g.n)
    for v in range(g.n):
        sub = g.induced([u for u in keep_all if u != v])
        if not decide_line_bruteforce(sub, limit).drawable:
            return False
    return True


def _sqrt(x: Fraction, digits: int) -> Fraction:
    """Rational approximation of sqrt(x) accurate to `digits` decimals."""
    scale = 10 ** digits
    return Fraction(math.isqrt((x.numerator * scale * scale) // x.denominator), scale)


def _neg_triangle_minus_triangle_vertex(digits: int):
    """The negative triangle without one triangle vertex: a square of
    positive edges with both diagonals negative, drawn on the paper square
    {(0,0), (0,1), (1/2,1/2), (-1/2,1/2)} (diagonal pairs are the enemies).
    """
    g = generate(PatternId("neg-triangle")).induced([0, 1, 3, 4])
    half = Fraction(1, 2)
    points = ((0, 0), (0, 1), (half, half), (-half, half))
    return g, Drawing(2, points)


def _neg_triangle_minus_outer_vertex(digits: int):
    """The negative triangle without one of the separate pair: a negative
    triangle whose hub is positive to all three corners; the hub hovers at
    (1/2, sqrt(3)/4) inside the unit triangle."""
    g = generate(PatternId("neg-triangle")).induced([0, 1, 2, 3])
    s3 = _sqrt(Fraction(3), digits)
    points = ((0, 0), (Fraction(1, 2), s3 / 2), (1, 0), (Fraction(1, 2), s3 / 4))
    return g, Drawing(2, points)


def _neg_cluster_minus_cluster_vertex(digits: int):
    """The negative cluster without one clique vertex: five mutual enemies
    on a pentagon-like ring, hub at the center, all golden-ratio algebra."""
    g = generate(PatternId("neg-cluster")).induced([0, 1, 2, 3, 4, 6])
    s5 = _sqrt(Fraction(5), digits)
    ring_y = _sqrt(Fraction(5, 8) + s5 / 8, digits)
    radial = _sqrt(2 / (5 - s5), digits)
    points = (
        ((s5 + 3) / 4, Fraction(0)),
        ((s5 - 1) / 4, Fraction(0)),
        (Fraction(0), ring_y),
        ((s5 + 1) / 4, (1 + s5) / 2 * radial),
        ((s5 + 1) / 2, ring_y),
        ((s5 + 1) / 4, (1 + s5) / 4 * radial),
    )
    return g, Drawing(2, points)


def _neg_cluster_minus_hub(digits: int):
    """The negative cluster without its hub: all edges negative, so any
    injective placement works."""
    g = generate(PatternId("neg-cluster")).induced([0, 1, 2, 3, 4, 5])
    points = tuple((Fraction(i), Fraction(0)) for i in range(6))
    return g, Drawing(2, points)


_PLANE_FIXTURES = (
    ("neg-triangle minus triangle vertex", _neg_triangle_minus_triangle_vertex),
    ("neg-triangle minus pair vertex", _neg_triangle_minus_outer_vertex),
    ("neg-cluster minus cluster vertex", _neg_cluster_minus_cluster_vertex),
    ("neg-cluster minus hub", _neg_cluster_minus_hub),
)


@dataclass(frozen=True)
class PlaneFixtureReport:
    """Validity of the fixed 2-D drawings for every distinct single-vertex
    deletion of the two plane patterns."""

    results: tuple  # (fixture name, valid at full precision) pairs
    precision_stable: bool  # verdicts agree at reduced precision

    @property
    def ok(self) -> bool:
        return self.precision_stable and all(v for _, v in self.results)


def verify_minimal_plane_fixtures(digits: int = 60, cross_digits: int = 30) -> PlaneFixtureReport:
    """Check the stored 2-D drawings for the vertex-deleted plane patterns.

    Irrational coordinates are approximated by rationals with `digits`
    decimals; the validity margins are wide, and re-checking at
    `cross_digits` guards against the approximation ever flipping a verdict.
    """
    results = []
    stable = True
    for name, build in _PLANE_FIXTURES:
        g, drawing = build(digits)
        valid = check_valid(g, drawing).valid
        g2, drawing2 = build(cross_digits)
        stable = stable and valid == check_valid(g2, drawing2).valid
        results.append((name, valid))
    return PlaneFixtureReport(tuple(results), stable)


def verify_central_witness(g: SignedGraph, a0: int, around: Sequence) -> bool:
    """Does a0 together with the 2k vertices `around` induce the
    trapped-vertex template?  `around` lists the k left path neighbors
    outermost-first, then the k right path neighbors innermost-first, so
    that around[:k] + [a0] + around[k:] reads as the path.

    The template: consecutive path vertices joined positively, plus
    negative chords between every pair at path distance exactly k.  A
    vertex with this neighborhood can never be drawn leftmost or rightmost,
    which is what makes the f1 family undrawable: any f1:n,k cycle vertex
    with its k neighbors to each side matches, provided n > 3k so that the
    far side of the cycle contributes no extra edges inside the window.
    For k = 1 the chords would collide with the path, so no graph matches.
    """
    if len(around) % 2 != 0 or not around:
        raise ValueError("need an even, nonempty vertex list around the center")
    k = len(around) // 2
    path = list(around[:k]) + [a0] + list(around[k:])
    if len(set(path)) != len(path):
        raise ValueError("duplicate vertices in the witness set")
    if any(not 0 <= v < g.n for v in path):
        raise ValueError("witness vertex out of range")

    expected_pos = {(i, i + 1) for i in range(2 * k)}
    expected_neg = {(i, i + k) for i in range(k + 1)}
    if expected_pos & expected_neg:
        return False  # k = 1: template is self-contradictory
    m = 2 * k + 1
    for i in range(m):
        for j in range(i + 1, m):
            want = 1 if (i, j) in expected_pos else -1 if (i, j) in expected_neg else 0
            if g.sign(path[i], path[j]) != want:
                return False
    return True
