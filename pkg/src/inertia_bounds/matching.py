"""Maximum matchings and matching-number queries.

:func:`maximum_matching` is the production path (blossom contraction,
deterministic tie-breaking).  :func:`matching_bruteforce` exists only as
a test oracle and is intentionally the dumbest correct algorithm.

The quantified queries (does some/every maximum matching use an edge,
cover a vertex, avoid an edge set) are all answered through matching
numbers of deleted graphs, so they inherit the exactness of the solver
instead of enumerating matchings.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .graphs import Edge, Graph, _normalize_edge, delete_edges, delete_vertex, delete_vertices

# branch-on-edge recursion is fine up to this many edges (or few vertices)
BRUTE_FORCE_EDGE_BUDGET = 24
BRUTE_FORCE_VERTEX_BUDGET = 12


class BudgetExceededError(ValueError):
    """A brute-force oracle was asked to exceed its stated budget."""


def maximum_matching(g: Graph) -> frozenset[Edge]:
    """One maximum matching, as a frozenset of (u, v) pairs with u < v.

    Augmenting-path search with blossom contraction.  Only the SIZE of
    the result is canonical; which matching is returned is deterministic
    (ascending vertex and neighbor order) but otherwise arbitrary, and
    callers must not rely on the particular edges chosen.
    """
    n = g.n
    adj = [sorted(g.adj[v]) for v in range(n)]
    match = [-1] * n

    # greedy warm start, then one augmenting search per exposed vertex
    for v in range(n):
        if match[v] == -1:
            for u in adj[v]:
                if match[u] == -1:
                    match[v] = u
                    match[u] = v
                    break

    parent = [-1] * n
    base = list(range(n))
    in_queue = [False] * n

    def lca(a: int, b: int) -> int:
        on_path = [False] * n
        x = a
        while True:
            x = base[x]
            on_path[x] = True
            if match[x] == -1:
                break
            x = parent[match[x]]
        y = b
        while True:
            y = base[y]
            if on_path[y]:
                return y
            y = parent[match[y]]

    def mark_blossom(v: int, stem: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != stem:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def augment_from(root: int) -> bool:
        for i in range(n):
            parent[i] = -1
            base[i] = i
            in_queue[i] = False
        in_queue[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    # odd cycle: contract the blossom to its stem
                    stem = lca(v, to)
                    in_blossom = [False] * n
                    mark_blossom(v, stem, to, in_blossom)
                    mark_blossom(to, stem, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = stem
                            if not in_queue[i]:
                                in_queue[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        # augment: flip matched/unmatched along the path
                        u = to
                        while u != -1:
                            pv = parent[u]
                            nxt = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = nxt
                        return True
                    in_queue[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            augment_from(v)
    return frozenset(
        (v, match[v]) for v in range(n) if match[v] > v
    )


def matching_number(g: Graph) -> int:
    """Size of a maximum matching."""
    return len(maximum_matching(g))


def matching_bruteforce(g: Graph) -> int:
    """Maximum matching size by recursive branch-on-edge.  Test oracle only.

    Budget: at most 24 edges or at most 12 vertices; beyond that the
    recursion is unreasonable and the call is rejected.
    """
    if g.num_edges > BRUTE_FORCE_EDGE_BUDGET and g.n > BRUTE_FORCE_VERTEX_BUDGET:
        raise BudgetExceededError(
            f"brute-force matching limited to {BRUTE_FORCE_EDGE_BUDGET} edges "
            f"or {BRUTE_FORCE_VERTEX_BUDGET} vertices; "
            f"got {g.num_edges} edges on {g.n} vertices"
        )

    def best(edges: tuple[Edge, ...]) -> int:
        if not edges:
            return 0
        u, v = edges[0]
        skip = best(edges[1:])
        rest = tuple(e for e in edges[1:] if u not in e and v not in e)
        return max(skip, 1 + best(rest))

    return best(tuple(sorted(g.edges)))


# ---------------------------------------------------------------------------
# quantified queries, all reduced to matching numbers of modified graphs


def edge_in_some_maximum_matching(g: Graph, edge: tuple[int, int]) -> bool:
    """Is ``edge`` contained in at least one maximum matching?

    True iff forcing the edge wastes nothing:
    1 + m(G - {u, v}) == m(G).
    """
    e = _normalize_edge(*edge)
    if e not in g.edges:
        raise ValueError(f"edge {e} not present in graph")
    rest = delete_vertices(g, e).graph
    return 1 + matching_number(rest) == matching_number(g)


def exists_max_matching_avoiding(g: Graph, edges: Iterable[tuple[int, int]]) -> bool:
    """Is there a maximum matching using none of ``edges``?

    True iff deleting the edges leaves the matching number unchanged.
    """
    f = list(edges)
    return matching_number(delete_edges(g, f)) == matching_number(g)


def every_max_matching_avoids(g: Graph, edges: Iterable[tuple[int, int]]) -> bool:
    """Does every maximum matching avoid all of ``edges``?

    Equivalent to: no edge of the set lies in any maximum matching.
    """
    return not any(edge_in_some_maximum_matching(g, e) for e in set(
        _normalize_edge(*e) for e in edges
    ))


def every_max_matching_covers(g: Graph, v: int) -> bool:
    """Is vertex ``v`` matched in every maximum matching?

    True iff removing it drops the matching number:
    m(G - v) == m(G) - 1.
    """
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    return matching_number(delete_vertex(g, v)) == matching_number(g) - 1
