"""Exhaustive ground-truth decider for 1-D drawability of signed graphs.

Works on arbitrary (not necessarily complete) signed graphs by searching
the space of vertex orderings for one realizable by a valid drawing;
general drawability is NP-complete, so exponential worst-case cost is
inherent and the default size bound is small.

The search sweeps orderings in lexicographic order.  Two exact shortcuts
keep the sweep honest while skipping work:

* reversal symmetry: an ordering is realizable iff its mirror is, so only
  orderings placing vertex 0 in the left half are explored;
* monotone violations: once a prefix pins down a violating triple of the
  necessary conditions, or makes one inevitable, every completion fails,
  so the whole subtree is discarded.

Orderings surviving to a full leaf are then settled exactly: the
conditions are necessary but not sufficient, so each candidate must also
pass the gap-feasibility check inside `construct_drawing`.

`orderings_tested` counts orderings *decided*, whether by an explicit
check, a discarded subtree, or mirror symmetry; on exhaustion it always
equals n!.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Optional

from .core import Drawing, SignedGraph, VertexOrdering
from .linedraw import OrderContext, UnrealizableOrderError, construct_drawing

DEFAULT_MAX_VERTICES = 10
MAX_VERTICES_ENV = "SIGNEDLINE_ORACLE_MAX_N"


class OracleBudgetError(RuntimeError):
    """The ordering budget ran out before the search could conclude."""


@dataclass(frozen=True)
class OracleResult:
    drawable: bool
    ordering: Optional[VertexOrdering] = None
    drawing: Optional[Drawing] = None
    orderings_tested: int = 0


def _max_vertices() -> int:
    return int(os.environ.get(MAX_VERTICES_ENV, DEFAULT_MAX_VERTICES))


def decide_line_bruteforce(g: SignedGraph, limit: Optional[int] = None) -> OracleResult:
    """Decide 1-D drawability by exhausting vertex orderings.

    Returns the lexicographically first passing ordering (vertex 0 kept in
    the left half) with its constructed drawing, or a not-drawable verdict
    after covering all n! orderings.  Without `limit`, graphs larger than
    the default bound (10 vertices, env SIGNEDLINE_ORACLE_MAX_N) are
    rejected; with `limit`, the search raises OracleBudgetError once more
    than `limit` orderings have been decided inconclusively.
    """
    n = g.n
    if limit is None:
        bound = _max_vertices()
        if n > bound:
            raise ValueError(
                f"{n} vertices exceeds the oracle bound {bound}; "
                f"pass limit= (or set {MAX_VERTICES_ENV}) to search anyway"
            )
        budget = None
    else:
        budget = int(limit)

    pos_adj = [g.pos_neighbors(v) for v in range(n)]
    neg_adj = [g.neg_neighbors(v) for v in range(n)]
    fact = [math.factorial(k) for k in range(n + 1)]
    half = (n + 1) // 2  # vertex 0 may occupy ranks 0..half-1

    placed_rank = [-1] * n
    # pos_seen[w], unplaced w: some positive neighbor of w is already placed.
    # A negative neighbor placed after that pins a future violation at w.
    pos_seen = [False] * n
    # right_neg_seen[w], placed w: a negative neighbor sits to w's right.
    # Any positive neighbor of w placed beyond it would violate, so the
    # moment this flips with positive neighbors of w still unplaced the
    # branch is dead.
    right_neg_seen = [False] * n
    unplaced_pos = [0] * n
    prefix = []
    covered = 0

    def spend(amount: int) -> None:
        nonlocal covered
        covered += amount
        if budget is not None and covered > budget:
            raise OracleBudgetError(
                f"covered more than {budget} orderings without a verdict"
            )

    def try_place(u: int, t: int):
        undo_pos, undo_cnt, undo_rns = [], [], []
        ok = True
        for w in pos_adj[u]:
            if placed_rank[w] >= 0:
                unplaced_pos[w] -= 1
                undo_cnt.append(w)
                if right_neg_seen[w]:
                    ok = False
                    break
            elif not pos_seen[w]:
                pos_seen[w] = True
                undo_pos.append(w)
        if ok:
            for w in neg_adj[u]:
                if placed_rank[w] >= 0:
                    if not right_neg_seen[w]:
                        right_neg_seen[w] = True
                        undo_rns.append(w)
                        if unplaced_pos[w] > 0:
                            ok = False
                            break
                elif pos_seen[w]:
                    ok = False
                    break
        if not ok:
            for w in undo_cnt:
                unplaced_pos[w] += 1
            for w in undo_pos:
                pos_seen[w] = False
            for w in undo_rns:
                right_neg_seen[w] = False
            return None
        placed_rank[u] = t
        right_neg_seen[u] = False
        unplaced_pos[u] = sum(1 for w in pos_adj[u] if placed_rank[w] < 0)
        prefix.append(u)
        return (undo_pos, undo_cnt, undo_rns)

    def unplace(u: int, undo) -> None:
        undo_pos, undo_cnt, undo_rns = undo
        prefix.pop()
        placed_rank[u] = -1
        for w in undo_cnt:
            unplaced_pos[w] += 1
        for w in undo_pos:
            pos_seen[w] = False
        for w in undo_rns:
            right_neg_seen[w] = False

    certificate = None

    def dfs(t: int) -> bool:
        nonlocal certificate
        if t == n:
            spend(1)
            # The prefix passes the necessary conditions by construction;
            # it still has to survive the exact realizability check.
            ordering = VertexOrdering(tuple(prefix))
            try:
                drawing = construct_drawing(OrderContext(g, ordering))
            except UnrealizableOrderError:
                return False
            certificate = (ordering, drawing)
            return True
        last_zero_slot = t == half - 1 and placed_rank[0] < 0
        for u in range(n):
            if placed_rank[u] >= 0:
                continue
            if last_zero_slot and u != 0:
                spend(fact[n - t - 1])  # mirror of an explored ordering
                continue
            undo = try_place(u, t)
            if undo is None:
                spend(fact[n - t - 1])  # every completion inherits the violation
                continue
            if dfs(t + 1):
                return True
            unplace(u, undo)
        return False

    if dfs(0):
        ordering, drawing = certificate
        return OracleResult(True, ordering, drawing, covered)

    assert covered == fact[n], "coverage bookkeeping out of sync"
    return OracleResult(False, orderings_tested=covered)
