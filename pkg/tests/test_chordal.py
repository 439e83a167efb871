import random

from signedline.core import Graph
from signedline.generators import random_chordal, rng_for
from signedline.linedraw import is_chordal_with_peo, lex_bfs


def verify_peo_directly(h, ordering):
    """Elimination-clique check, written independently of the library's."""
    rank = {v: r for r, v in enumerate(ordering.order)}
    for v in range(h.n):
        later = [w for w in h.adjacency[v] if rank[w] > rank[v]]
        for a in later:
            for b in later:
                if a < b and b not in h.adjacency[a]:
                    return False
    return True


def cycle_is_chordless(h, cycle):
    k = len(cycle)
    assert k >= 4
    assert len(set(cycle)) == k
    for i in range(k):
        assert cycle[(i + 1) % k] in h.adjacency[cycle[i]]
    for i in range(k):
        for j in range(i + 2, k):
            if (i, j) != (0, k - 1):
                assert cycle[j] not in h.adjacency[cycle[i]]
    return True


def test_four_cycle_not_chordal():
    h = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    peo, cycle = is_chordal_with_peo(h)
    assert peo is None
    assert len(cycle) == 4
    assert cycle_is_chordless(h, cycle.vertices)


def test_trees_are_chordal():
    rng = random.Random(3)
    for n in (1, 2, 5, 12, 30):
        edges = [(rng.randrange(v), v) for v in range(1, n)]
        h = Graph.from_edges(n, edges)
        peo, cycle = is_chordal_with_peo(h)
        assert cycle is None
        assert verify_peo_directly(h, peo)


def test_k4_minus_edge():
    h = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    peo, cycle = is_chordal_with_peo(h)
    assert cycle is None
    assert verify_peo_directly(h, peo)


def test_wheel_and_long_cycles_give_witnesses():
    wheel = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4), (2, 4), (3, 4)])
    peo, cycle = is_chordal_with_peo(wheel)
    assert peo is None
    assert cycle_is_chordless(wheel, cycle.vertices)

    for k in (5, 6, 9):
        ring = Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])
        peo, cycle = is_chordal_with_peo(ring)
        assert peo is None
        assert len(cycle) == k
        assert cycle_is_chordless(ring, cycle.vertices)


def test_lex_bfs_tie_breaks_by_lowest_index():
    # Disconnected and edgeless graphs visit in pure index order.
    h = Graph.from_edges(5, [])
    assert lex_bfs(h) == [0, 1, 2, 3, 4]
    h = Graph.from_edges(6, [(1, 4), (2, 3)])
    visit = lex_bfs(h)
    assert visit[0] == 0
    # After visiting 1, its neighbor 4 is preferred over lower-index 2.
    assert visit.index(4) == visit.index(1) + 1


def test_random_chordal_graphs_recognized_with_verified_peo():
    for seed in range(120):
        rng = rng_for("chordal-unit", seed)
        n = rng.randint(1, 24)
        h = Graph.from_edges(n, random_chordal(n, rng))
        peo, cycle = is_chordal_with_peo(h)
        assert cycle is None, (seed, sorted(h.edges))
        assert verify_peo_directly(h, peo)


def test_nonchordal_witnesses_on_random_supergraphs():
    # Planting one long chordless cycle into a random chordal graph must
    # flip the verdict, and the returned witness must itself check out.
    for seed in range(60):
        rng = rng_for("nonchordal-unit", seed)
        n = rng.randint(6, 20)
        edges = set(random_chordal(n, rng))
        ring = rng.sample(range(n), 5)
        for i, u in enumerate(ring):
            v = ring[(i + 1) % 5]
            edges.add((min(u, v), max(u, v)))
        for i, u in enumerate(ring):
            for j in range(i + 2, 5):
                v = ring[j]
                if (i, j) != (0, 4):
                    edges.discard((min(u, v), max(u, v)))
        h = Graph.from_edges(n, edges)
        peo, cycle = is_chordal_with_peo(h)
        # The ring now induces a plain 5-cycle, so the graph cannot be chordal.
        assert peo is None
        assert cycle_is_chordless(h, cycle.vertices)
