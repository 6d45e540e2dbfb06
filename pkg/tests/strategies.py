"""Hypothesis strategies for small categories and setoids."""

from hypothesis import strategies as st

from setoidkan.fincat import FinCat
from setoidkan.setoid import free_setoid, relational_setoid


def _closure(n, rel):
    reach = [[i == j or (i, j) in rel for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            if reach[i][k]:
                for j in range(n):
                    if reach[k][j]:
                        reach[i][j] = True
    return reach


@st.composite
def preorders(draw, max_objects=5):
    """A finite preorder as a category: one arrow per related pair."""
    n = draw(st.integers(1, max_objects))
    pairs = draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n))
    reach = _closure(n, pairs)
    objects = [str(i) for i in range(n)]
    arrows = [((i, j), str(i), str(j)) for i in range(n) for j in range(n) if reach[i][j]]
    return FinCat.build(objects, arrows, lambda o: (int(o), int(o)),
                        lambda g, f: (f[0], g[1]), name="P")


@st.composite
def partitions(draw, max_points=5):
    n = draw(st.integers(1, max_points))
    labels = draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))
    return n, labels


@st.composite
def relational_setoids(draw, max_points=5):
    n, labels = draw(partitions(max_points))
    X0 = list(range(n))
    return relational_setoid(X0, [(x, y) for x in X0 for y in X0 if labels[x] == labels[y]])


@st.composite
def free_setoids(draw, max_points=5, max_edges=6):
    n = draw(st.integers(1, max_points))
    edges = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=max_edges))
    return free_setoid(list(range(n)), edges)
