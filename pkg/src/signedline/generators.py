"""Seeded random instance generators for benchmarks and tests."""

from __future__ import annotations

import random

from .core import SignedGraph


def rng_for(seed, *scope) -> random.Random:
    """Deterministic generator namespaced by seed and scope labels."""
    return random.Random(":".join(str(s) for s in (seed, *scope)))


def random_complete(n: int, rng: random.Random) -> SignedGraph:
    """Complete signed graph with independent fair coin signs."""
    pos, neg = [], []
    for u in range(n):
        for v in range(u + 1, n):
            (pos if rng.getrandbits(1) else neg).append((u, v))
    return SignedGraph(n, frozenset(pos), frozenset(neg))


def random_signed(n: int, rng: random.Random, p_edge: float = 0.5, p_pos: float = 0.5) -> SignedGraph:
    """Sparse signed graph: each pair present with p_edge, positive with p_pos."""
    pos, neg = [], []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p_edge:
                (pos if rng.random() < p_pos else neg).append((u, v))
    return SignedGraph(n, frozenset(pos), frozenset(neg))


def random_balanced(n: int, rng: random.Random, p_edge: float = 0.5) -> SignedGraph:
    """Split the vertices in two camps; friends inside, enemies across."""
    side = [rng.getrandbits(1) for _ in range(n)]
    pos, neg = [], []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p_edge:
                (pos if side[u] == side[v] else neg).append((u, v))
    return SignedGraph(n, frozenset(pos), frozenset(neg))


def random_clusterizable(n: int, rng: random.Random, p_edge: float = 0.5) -> SignedGraph:
    """Random camps (possibly many); friends inside, enemies across."""
    camps = max(1, rng.randint(1, n)) if n else 1
    camp = [rng.randrange(camps) for _ in range(n)]
    pos, neg = [], []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p_edge:
                (pos if camp[u] == camp[v] else neg).append((u, v))
    return SignedGraph(n, frozenset(pos), frozenset(neg))


def random_chordal(n: int, rng: random.Random, max_clique: int = 4):
    """Random chordal graph built by gluing each new vertex onto a clique.

    Grown in reverse elimination order: vertex i joins a random subset of a
    previously recorded clique, so eliminating n-1, ..., 1, 0 always leaves
    clique neighborhoods.  Returns the edge set.
    """
    edges = set()
    bags = [[]]
    for v in range(n):
        bag = bags[rng.randrange(len(bags))]
        take = rng.randint(0, min(len(bag), max_clique - 1))
        chosen = rng.sample(bag, take)
        for u in chosen:
            edges.add((min(u, v), max(u, v)))
        bags.append(chosen + [v])
    return edges
