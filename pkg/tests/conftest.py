"""Shared builders for the test suite.

Everything here is deterministic: random constructions take an explicit
``random.Random`` instance or a seed, never the global RNG.
"""

import random

import pytest

from inertia_bounds import Graph


def cycle_with_tail(q: int, tail: int) -> Graph:
    """A q-cycle with a path of ``tail`` extra vertices hanging off vertex 0."""
    edges = [(i, (i + 1) % q) for i in range(q)]
    prev = 0
    for k in range(tail):
        edges.append((prev, q + k))
        prev = q + k
    return Graph(q + tail, edges)


def lower_bound_near_miss() -> Graph:
    """Two 4-cycles joined by a bridge: the lower-bound near-miss witness."""
    return Graph(
        8,
        [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4)],
    )


def random_tree(n: int, rng: random.Random) -> Graph:
    # attach each new vertex to a uniformly random earlier one
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    return Graph(n, edges)


def random_unicyclic(rng: random.Random, lo: int = 7, hi: int = 10) -> Graph:
    """Connected graph with exactly one cycle: random tree plus one extra edge."""
    n = rng.randint(lo, hi)
    t = random_tree(n, rng)
    non_edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in t.edges
    ]
    extra = rng.choice(non_edges)
    return Graph(n, list(t.edges) + [extra])


def all_trees(max_n: int):
    """Yield one representative of every tree isomorphism class, 2 <= n <= max_n."""
    nx = pytest.importorskip("networkx")
    for n in range(2, max_n + 1):
        for t in nx.nonisomorphic_trees(n):
            yield Graph(n, list(t.edges()))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph(10, outer + inner + spokes)
