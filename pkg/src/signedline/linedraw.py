"""Deciding and constructing valid line drawings.

A 1-D drawing induces a left-to-right vertex order, and whether a drawing
with that order exists depends on the order alone.  Two mirror conditions
are necessary at every vertex:

  (left)   no positive neighbor lies strictly left of a negative neighbor
           that is itself left of the vertex;
  (right)  no positive neighbor lies strictly right of a negative neighbor
           that is itself right of the vertex.

They are not sufficient: an order can pass both yet admit no positions
(the distance constraints may cycle, e.g. positive edges {13, 15, 24} with
negative edges {03, 05, 25} under the order 1,5,2,3,0,4).  Realizing an
order is therefore a feasibility question over the inter-vertex gaps,
which `construct_drawing` settles exactly: a greedy left-to-right sweep
for the common case, falling back to an exact rational simplex.

`conditions_check` tests the necessary conditions, and `decide_complete`
decides complete signed graphs in O(n^2) overall, where passing orders
always turn out realizable.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Optional

from .core import (
    Drawing,
    Graph,
    SignedGraph,
    VertexOrdering,
    positive_graph,
)

LEFT = "left"
RIGHT = "right"


class NotCompleteError(ValueError):
    """`decide_complete` got a graph with an unconnected vertex pair."""

    def __init__(self, pair):
        self.pair = pair
        super().__init__(
            f"graph is not complete ({pair[0]} and {pair[1]} share no edge); "
            "use the brute-force oracle for general graphs"
        )


class UnrealizableOrderError(ValueError):
    """The order passes the necessary conditions but admits no drawing."""


@dataclass(frozen=True)
class OrderContext:
    """A signed graph with a candidate left-to-right vertex order."""

    graph: SignedGraph
    ordering: VertexOrdering

    def __post_init__(self):
        if len(self.ordering) != self.graph.n:
            raise ValueError("ordering does not cover all vertices")

    @cached_property
    def rank(self) -> tuple:
        return self.ordering.rank


@dataclass(frozen=True)
class ConditionViolation:
    """Vertex i with negative neighbor j and a strictly farther positive
    neighbor jprime on the same side of i."""

    i: int
    j: int
    jprime: int
    side: str


@dataclass(frozen=True)
class ChordlessCycle:
    """A cycle of length >= 4 with no chord, witnessing non-chordality."""

    vertices: tuple

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class SearchExhausted:
    """All candidate orderings of `vertices` fail the order conditions."""

    vertices: tuple
    orderings_tested: int


@dataclass(frozen=True)
class DecisionResult:
    drawable: bool
    ordering: Optional[VertexOrdering] = None
    drawing: Optional[Drawing] = None
    witness: object = None


def conditions_check(ctx: OrderContext) -> Optional[ConditionViolation]:
    """Return None when the order is realizable, else the first violation.

    The witness is the lexicographically smallest violating triple
    (i, j, jprime) by vertex index, for reproducible reports.
    """
    g, rank = ctx.graph, ctx.rank

    bad = None
    for i in range(g.n):
        ri = rank[i]
        friends = g.pos_neighbors(i)
        enemies = g.neg_neighbors(i)
        if not friends or not enemies:
            continue
        min_pos_left = max_pos_right = None
        for j in friends:
            r = rank[j]
            if r < ri:
                if min_pos_left is None or r < min_pos_left:
                    min_pos_left = r
            elif max_pos_right is None or r > max_pos_right:
                max_pos_right = r
        for j in enemies:
            r = rank[j]
            if r < ri:
                if min_pos_left is not None and min_pos_left < r:
                    bad = i
                    break
            elif max_pos_right is not None and max_pos_right > r:
                bad = i
                break
        if bad is not None:
            break

    if bad is None:
        return None

    i = bad
    ri = rank[i]
    for j in ctx.graph.neg_neighbors(i):
        rj = rank[j]
        if rj < ri:
            side, farther = LEFT, [p for p in ctx.graph.pos_neighbors(i) if rank[p] < rj]
        else:
            side, farther = RIGHT, [p for p in ctx.graph.pos_neighbors(i) if rank[p] > rj]
        if farther:
            return ConditionViolation(i, j, min(farther), side)
    raise AssertionError("violating vertex without a witness triple")


def extremal_neighbors(ctx: OrderContext, v: int) -> tuple:
    """Ranks of the four extremes around v under the context's order:

      nearest negative on the left   (sentinel -1 when none),
      farthest positive on the left  (v's own rank when none),
      farthest positive on the right (v's own rank when none),
      nearest negative on the right  (sentinel n when none).

    For a realizable order these come out weakly sandwiched around v's rank,
    with the negatives strictly outside the positives.
    """
    g, rank = ctx.graph, ctx.rank
    rv = rank[v]
    lminus, rminus = -1, g.n
    lplus = rplus = rv
    for j in g.neg_neighbors(v):
        r = rank[j]
        if r < rv:
            if r > lminus:
                lminus = r
        elif r < rminus:
            rminus = r
    for j in g.pos_neighbors(v):
        r = rank[j]
        if r < rv:
            if lplus == rv or r < lplus:
                lplus = r
        elif r > rplus:
            rplus = r
    return (lminus, lplus, rplus, rminus)


def construct_drawing(ctx: OrderContext) -> Drawing:
    """Exact 1-D positions realizing an order that passes `conditions_check`.

    Raises ValueError on an order failing the conditions, and
    UnrealizableOrderError on one that passes them but admits no positions.
    A fast greedy sweep handles the common case; when its local choices
    paint it into a corner the full constraint system is solved exactly.
    """
    violation = conditions_check(ctx)
    if violation is not None:
        raise ValueError(f"order fails the necessary conditions: {violation}")
    positions = _sweep_positions(ctx)
    if positions is None:
        positions = _lp_positions(ctx)
    if positions is None:
        raise UnrealizableOrderError(
            "order passes the necessary conditions but its distance "
            "constraints are contradictory"
        )
    points = [Fraction(0)] * ctx.graph.n
    for t, v in enumerate(ctx.ordering.order):
        points[v] = positions[t]
    return Drawing.line(points)


def _simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """A smallest-denominator rational strictly inside (lo, hi).

    Continued-fraction descent: grab an integer when the interval holds
    one, otherwise recurse into the reciprocal of the fractional parts.
    Keeps constructed coordinates small where midpoints would pile up
    powers of two.
    """
    floor_lo = lo.numerator // lo.denominator
    if floor_lo + 1 < hi:
        return Fraction(floor_lo + 1)
    if lo == floor_lo:
        # Interval sits inside (floor_lo, floor_lo + 1]; use the largest
        # unit fraction strictly below its width.
        steps = (Fraction(1) / (hi - floor_lo)).__floor__() + 1
        return floor_lo + Fraction(1, steps)
    return floor_lo + 1 / _simplest_between(1 / (hi - floor_lo), 1 / (lo - floor_lo))


def _sweep_positions(ctx: OrderContext):
    """Greedy left-to-right placement; None when its choices dead-end.

    Placing a vertex u at x imposes, on later vertices, a strict lower
    bound 2x - pos(farthest positive left of u) on u's nearest right
    negative, and a strict upper bound 2x - pos(nearest negative left of u)
    on u's farthest right positive.  An upper bound on a rank also caps
    every earlier rank, since positions increase along the order.  Each
    vertex goes to the simplest rational in its open feasible interval, or
    one unit past the lower end when unbounded above.  The sweep is sound
    but not complete: positions it returns satisfy every constraint, but an
    empty interval only means these particular choices failed.
    """
    n = ctx.graph.n
    order = ctx.ordering.order
    lowers = [[] for _ in range(n)]
    caps = []  # heap of (bound, rank it binds); expires once that rank is placed
    pos = [Fraction(0)] * n  # indexed by rank

    for t in range(n):
        v = order[t]
        while caps and caps[0][1] < t:
            heapq.heappop(caps)
        if t > 0:
            lo = max(lowers[t], default=pos[t - 1])
            if lo < pos[t - 1]:
                lo = pos[t - 1]
            if caps:
                hi = caps[0][0]
                if not lo < hi:
                    return None
                pos[t] = _simplest_between(lo, hi)
            else:
                pos[t] = lo + 1

        lminus, lplus, rplus, rminus = extremal_neighbors(ctx, v)
        if rminus < n:
            lowers[rminus].append(2 * pos[t] - pos[lplus])
        if rplus > t and lminus >= 0:
            heapq.heappush(caps, (2 * pos[t] - pos[lminus], rplus))
    return pos


def _gap_system(ctx: OrderContext):
    """Margin form of the realizability constraints over inter-vertex gaps.

    Gap i separates ranks i and i+1.  Every constraint compares two windows
    of gaps around a vertex: its right-enemy window must outweigh its
    left-friend window, and its left-enemy window its right-friend window.
    Strict inequalities and scale-invariance make ">" interchangeable with
    ">= 1".  Rows are (coefficients, bound) meaning coeffs . gaps >= bound.
    """
    n = ctx.graph.n
    rows = []
    for t, v in enumerate(ctx.ordering.order):
        lminus, lplus, rplus, rminus = extremal_neighbors(ctx, v)
        if rminus < n and lplus < t:
            coeffs = [0] * (n - 1)
            for i in range(t, rminus):
                coeffs[i] += 1
            for i in range(lplus, t):
                coeffs[i] -= 1
            rows.append((coeffs, 1))
        if lminus >= 0 and rplus > t:
            coeffs = [0] * (n - 1)
            for i in range(lminus, t):
                coeffs[i] += 1
            for i in range(t, rplus):
                coeffs[i] -= 1
            rows.append((coeffs, 1))
    return rows


def _lp_positions(ctx: OrderContext):
    """Exact positions via feasibility of the gap system, or None."""
    n = ctx.graph.n
    if n == 0:
        return []
    gaps = _solve_margin_system(_gap_system(ctx), n - 1)
    if gaps is None:
        return None
    pos = [Fraction(0)] * n
    for t in range(1, n):
        pos[t] = pos[t - 1] + 1 + gaps[t - 1]
    return pos


def _solve_margin_system(rows, nvars):
    """Solve {coeffs . (1 + h) >= bound, h >= 0} exactly; None if infeasible.

    Substituting x = 1 + h folds the positivity margin into the right-hand
    side; feasibility is then settled by a dense phase-1 simplex with
    Bland's rule over Fractions.  Problem sizes here are tiny (a few dozen
    rows), so simplicity beats sparsity.
    """
    rhs = []
    for coeffs, bound in rows:
        rhs.append(Fraction(bound) - sum(Fraction(c) for c in coeffs))

    m = len(rows)
    # Columns: h (nvars), surplus (m), artificial (one per row with rhs > 0).
    art_of = {}
    for i in range(m):
        if rhs[i] > 0:
            art_of[i] = nvars + m + len(art_of)
    width = nvars + m + len(art_of)

    tableau = []
    basis = []
    for i, (coeffs, _) in enumerate(rows):
        row = [Fraction(0)] * (width + 1)
        sign = 1 if rhs[i] > 0 else -1
        for j, c in enumerate(coeffs):
            row[j] = Fraction(sign * c)
        row[nvars + i] = Fraction(-sign)
        row[width] = Fraction(abs(rhs[i]))
        if i in art_of:
            row[art_of[i]] = Fraction(1)
            basis.append(art_of[i])
        else:
            basis.append(nvars + i)
        tableau.append(row)

    # Phase-1 objective: minimize the artificial sum.
    cost = [Fraction(0)] * (width + 1)
    for i in art_of:
        for j in range(width + 1):
            cost[j] -= tableau[i][j]

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            a = tableau[i][enter]
            if a > 0:
                ratio = tableau[i][width] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            break  # unbounded phase-1 cannot happen, but stay safe
        _, leave = best
        piv = tableau[leave][enter]
        tableau[leave] = [x / piv for x in tableau[leave]]
        for i in range(m):
            if i != leave and tableau[i][enter] != 0:
                f = tableau[i][enter]
                tableau[i] = [x - f * y for x, y in zip(tableau[i], tableau[leave])]
        if cost[enter] != 0:
            f = cost[enter]
            cost = [x - f * y for x, y in zip(cost, tableau[leave])]
        basis[leave] = enter

    if any(basis[i] in art_of.values() and tableau[i][width] != 0 for i in range(m)):
        return None
    if -cost[width] != 0:  # leftover artificial value
        return None
    solution = [Fraction(0)] * nvars
    for i in range(m):
        if basis[i] < nvars:
            solution[basis[i]] = tableau[i][width]
    return solution


def lex_bfs(h: Graph, vertices=None, ref_order=None) -> list:
    """Lexicographic BFS visit order.

    Ties among the maximum-label vertices go to the lowest vertex index, or,
    when `ref_order` is given, to the vertex appearing latest in it (the
    plus-rule used by multi-sweep recognition algorithms).  `vertices`
    restricts the sweep to one connected component; by default the whole
    vertex set is swept (restarting across components).
    """
    verts = sorted(range(h.n) if vertices is None else vertices)
    if not verts:
        return []
    adj = h.adjacency_lists
    ref_rank = None
    if ref_order is not None:
        ref_rank = [-1] * h.n
        for r, v in enumerate(ref_order):
            ref_rank[v] = r

    # Partition refinement over an array: unvisited vertices sit in `cells`
    # after the visited prefix, each label class a contiguous slice in label
    # order.  A group is [start, end, matched] where `matched` counts
    # members already swapped to the front during the current refinement.
    k = len(verts)
    cells = list(verts)
    loc = [0] * h.n
    for i, v in enumerate(cells):
        loc[v] = i
    whole = [0, k, 0]
    group_of = [None] * h.n
    for v in verts:
        group_of[v] = whole

    def swap_into(v, target):
        i = loc[v]
        other = cells[target]
        cells[i], cells[target] = other, v
        loc[other], loc[v] = i, target

    visit = []
    for head in range(k):
        grp = group_of[cells[head]]
        best = cells[head]
        if ref_rank is None:
            for i in range(grp[0] + 1, grp[1]):
                if cells[i] < best:
                    best = cells[i]
        else:
            for i in range(grp[0] + 1, grp[1]):
                if ref_rank[cells[i]] > ref_rank[best]:
                    best = cells[i]
        swap_into(best, head)
        group_of[best] = None
        grp[0] += 1
        visit.append(best)

        touched = []
        for w in adj[best]:
            gw = group_of[w]
            if gw is None:
                continue
            if gw[2] == 0:
                touched.append(gw)
            swap_into(w, gw[0] + gw[2])
            gw[2] += 1
        for gw in touched:
            start, end, matched = gw
            if matched < end - start:
                front = [start, start + matched, 0]
                for i in range(start, start + matched):
                    group_of[cells[i]] = front
                gw[0] = start + matched
            gw[2] = 0
    return visit


def _peo_failures(h: Graph, order: list):
    """Yield failing triples (v, parent, w) of the elimination-clique check.

    No triples means `order` is a perfect elimination ordering.  Membership
    sets are built per parent on demand: a failing graph usually reveals a
    triple long before most of them are needed.
    """
    rank = {v: r for r, v in enumerate(order)}
    adj = h.adjacency_lists
    neighbor_sets = {}
    for v in order:
        rv = rank[v]
        later = [w for w in adj[v] if rank[w] > rv]
        if len(later) < 2:
            continue
        parent = min(later, key=rank.__getitem__)
        ps = neighbor_sets.get(parent)
        if ps is None:
            ps = neighbor_sets[parent] = frozenset(adj[parent])
        for w in later:
            if w != parent and w not in ps:
                yield (v, parent, w)


def _verify_peo(h: Graph, order: list):
    """First failing triple of the elimination-clique check, or None."""
    return next(_peo_failures(h, order), None)


def _chordless_cycle_from(h: Graph, v: int, u: int, w: int):
    """Grow a chordless cycle through v from a failed elimination triple:
    u, w are neighbors of v with (u, w) not an edge.  A shortest u-w path
    avoiding the rest of v's neighborhood closes an induced cycle with v.
    Returns None when no such path exists (another triple must be used).
    """
    adj = h.adjacency_lists
    banned = (set(adj[v]) | {v}) - {u, w}
    prev = {u: None}
    queue = [u]
    while queue:
        nxt = []
        for x in queue:
            for y in adj[x]:
                if y in banned or y in prev:
                    continue
                prev[y] = x
                if y == w:
                    path = [w]
                    while path[-1] is not None:
                        path.append(prev[path[-1]])
                    path.pop()
                    path.reverse()
                    return ChordlessCycle(tuple([v] + path))
                nxt.append(y)
        queue = nxt
    return None


def _extract_chordless_cycle(h: Graph, order: list) -> ChordlessCycle:
    """Chordless cycle certificate from a failed elimination-ordering check."""
    for triple in _peo_failures(h, order):
        cycle = _chordless_cycle_from(h, *triple)
        if cycle is not None:
            return cycle
    raise AssertionError("no failing triple yields an induced cycle")


def is_chordal_with_peo(h: Graph):
    """(perfect elimination ordering, None) for chordal graphs, else
    (None, chordless cycle of length >= 4).

    The candidate ordering is the reverse of a lexicographic BFS sweep,
    verified by the elimination-clique check.
    """
    visit = lex_bfs(h)
    candidate = list(reversed(visit))
    if _verify_peo(h, candidate) is None:
        return VertexOrdering(tuple(candidate)), None
    return None, _extract_chordless_cycle(h, candidate)


def decide_complete(g: SignedGraph) -> DecisionResult:
    """Decide 1-D drawability of a complete signed graph.

    In a complete signed graph every pair of vertices is mutually left or
    right neighbors, so an ordering passes the realizability conditions iff
    around every vertex the signs read negatives, then positives, then the
    vertex, then positives, then negatives.  Equivalently, every closed
    neighborhood in the positive part must occupy a contiguous stretch of
    the order: each component of the positive part must admit an
    umbrella-free (proper-interval) ordering.

    Pipeline, linear per component except for the final quadratic pass:
    a non-chordal component is a definitive no with a chordless-cycle
    witness; otherwise three lexicographic BFS sweeps (each reusing the
    previous sweep for tie-breaking) produce an ordering that is
    umbrella-free whenever one exists.  Component orders are concatenated
    by smallest member (cross-component edges are all negative, so blocks
    never conflict), the conditions are checked, and a drawing is built.
    A condition violation at this stage certifies non-drawability.

    Whole graphs of at most four vertices go to the brute-force oracle.
    """
    missing = g.missing_pair()
    if missing is not None:
        raise NotCompleteError(missing)

    if g.n <= 4:
        from .oracle import decide_line_bruteforce

        res = decide_line_bruteforce(g)
        if res.drawable:
            return DecisionResult(True, res.ordering, res.drawing)
        witness = SearchExhausted(tuple(range(g.n)), res.orderings_tested)
        return DecisionResult(False, witness=witness)

    gplus = positive_graph(g)
    combined = []
    for comp in gplus.components():
        sweep1 = lex_bfs(gplus, comp)
        if _verify_peo(gplus, list(reversed(sweep1))) is not None:
            cycle = _extract_chordless_cycle(gplus, list(reversed(sweep1)))
            return DecisionResult(False, witness=cycle)
        sweep2 = lex_bfs(gplus, comp, ref_order=sweep1)
        combined.extend(lex_bfs(gplus, comp, ref_order=sweep2))

    ctx = OrderContext(g, VertexOrdering(tuple(combined)))
    violation = conditions_check(ctx)
    if violation is not None:
        # The sweep order is umbrella-free whenever the component allows it,
        # so a violation here means no ordering can pass.
        return DecisionResult(False, witness=violation)
    return DecisionResult(True, ctx.ordering, construct_drawing(ctx))
