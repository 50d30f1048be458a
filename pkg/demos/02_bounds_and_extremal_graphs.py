"""The matching/cyclomatic bounds on inertia, and who attains them.

For any simple graph, both inertia indices are pinned to the matching
number m and cyclomatic number c:

    m - c  <=  p  <=  m + c      and      m - c  <=  n  <=  m + c

Equality cases are completely understood when the graph's cycles are
pairwise vertex-disjoint, and this demo walks through one graph per
case, plus the near-miss graph that keeps the lower bound subtle.
"""

from inertia_bounds import (
    Graph,
    classify_n_upper,
    classify_p_lower,
    classify_p_upper,
    cyclomatic_number,
    every_max_matching_avoids,
    frontier_edges,
    graph_inertia,
    matching_number,
)


def cycle_with_tail(q, tail):
    edges = [(i, (i + 1) % q) for i in range(q)]
    prev = 0
    for k in range(tail):
        edges.append((prev, q + k))
        prev = q + k
    return Graph(q + tail, edges)


def report(name, g):
    ine = graph_inertia(g)
    m, c = matching_number(g), cyclomatic_number(g)
    print(f"{name}: p={ine.p} n={ine.n} m={m} c={c}  window [{m-c}, {m+c}]")
    return ine, m, c


# p hits the ceiling m + c exactly when every cycle has length 1 mod 4
# (and a matching condition on the cycle-contracted forest holds).
g = cycle_with_tail(5, 2)
report("C5 plus 2-tail", g)
print("  p = m + c?", classify_p_upper(g))

# n hits the ceiling when the residues are 3 mod 4 instead.
g = cycle_with_tail(3, 2)
report("C3 plus 2-tail", g)
print("  n = m + c?", classify_n_upper(g))

# The floor m - c is hit by p and n together, never separately, and
# needs residue 0 cycles.
g = cycle_with_tail(4, 2)
report("C4 plus 2-tail", g)
print("  p = n = m - c?", classify_p_lower(g))

# The near-miss: two 4-cycles joined by a bridge.  Residues are all 0
# and every maximum matching avoids the bridge, which is the whole
# frontier.  A naive "frontier avoidance" characterization would call
# this graph extremal, but p = 3 > m - c = 2.  Only the condition on
# the contracted forest tells the truth.
g = Graph(8, [(0, 1), (1, 2), (2, 3), (3, 0),
              (4, 5), (5, 6), (6, 7), (7, 4), (0, 4)])
report("two C4 plus bridge", g)
print("  frontier:", sorted(frontier_edges(g)))
print("  every max matching avoids the frontier?",
      every_max_matching_avoids(g, frontier_edges(g)))
print("  p = n = m - c?", classify_p_lower(g))
