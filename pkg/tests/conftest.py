from itertools import combinations

from hypothesis import strategies as st

from cwlab.core import Graph


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    names = [f"v{i}" for i in range(n)]
    pairs = list(combinations(names, 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(names, [p for p, keep in zip(pairs, chosen) if keep])


def path(n):
    names = [f"p{i}" for i in range(n)]
    return Graph(names, list(zip(names, names[1:])))


def cycle(n):
    names = [f"c{i}" for i in range(n)]
    return Graph(names, list(zip(names, names[1:])) + [(names[-1], names[0])])


def complete(n):
    names = [f"k{i}" for i in range(n)]
    return Graph(names, combinations(names, 2))
