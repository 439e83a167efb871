import hypothesis.strategies as st
from hypothesis import HealthCheck, settings

from signedline.core import SignedGraph

settings.register_profile(
    "suite", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("suite")


@st.composite
def signed_graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pos, neg = [], []
    for u in range(n):
        for v in range(u + 1, n):
            kind = draw(st.sampled_from(("none", "pos", "neg")))
            if kind == "pos":
                pos.append((u, v))
            elif kind == "neg":
                neg.append((u, v))
    return SignedGraph(n, frozenset(pos), frozenset(neg))


@st.composite
def complete_signed_graphs(draw, min_n=2, max_n=8):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pos, neg = [], []
    for u in range(n):
        for v in range(u + 1, n):
            (pos if draw(st.booleans()) else neg).append((u, v))
    return SignedGraph(n, frozenset(pos), frozenset(neg))
