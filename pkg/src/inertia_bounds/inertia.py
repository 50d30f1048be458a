"""Exact inertia of symmetric rational matrices.

Two independent routes are provided and kept deliberately separate:

* :func:`inertia_congruence` diagonalizes by symmetric congruence with
  exact rational arithmetic; by Sylvester's law of inertia the signs of
  the resulting diagonal count positive and negative eigenvalues.
* :func:`inertia_charpoly_oracle` computes the integer characteristic
  polynomial and reads the inertia off its coefficient signs; for a real
  symmetric matrix all roots are real, so Descartes' rule of signs is
  exact, not a bound.

Never merge the two paths: their agreement is a correctness check used
throughout the test suite.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence

from .graphs import Graph

Matrix = list[list[Fraction]]


class Inertia(NamedTuple):
    """Counts of positive, negative, and zero adjacency eigenvalues."""

    p: int
    n: int
    eta: int

    def __add__(self, other):  # type: ignore[override]
        if not isinstance(other, tuple) or len(other) != 3:
            return NotImplemented
        return Inertia(self.p + other[0], self.n + other[1], self.eta + other[2])

    @property
    def rank(self) -> int:
        return self.p + self.n


def adjacency_matrix(g: Graph) -> Matrix:
    """Adjacency matrix of ``g`` with exact rational entries."""
    m = [[Fraction(0)] * g.n for _ in range(g.n)]
    one = Fraction(1)
    for u, v in g.edges:
        m[u][v] = one
        m[v][u] = one
    return m


def _check_symmetric(m: Sequence[Sequence[Fraction]]) -> int:
    k = len(m)
    for i, row in enumerate(m):
        if len(row) != k:
            raise ValueError(f"matrix is not square: row {i} has {len(row)} entries")
    for i in range(k):
        for j in range(i + 1, k):
            if m[i][j] != m[j][i]:
                raise ValueError(
                    f"matrix is not symmetric at ({i}, {j}): "
                    f"{m[i][j]} != {m[j][i]}"
                )
    return k


def inertia_congruence(matrix: Sequence[Sequence[Fraction]]) -> Inertia:
    """Inertia by symmetric congruence elimination over the rationals.

    Pivot policy (deterministic): take the first nonzero diagonal entry in
    index order; if the remaining diagonal is entirely zero, take the
    lexicographically smallest nonzero off-diagonal pair {i, j} and apply
    a 2x2 block pivot.  The block [[0, a], [a, 0]] has eigenvalues +-a and
    contributes exactly one positive and one negative count.  Whatever
    remains when no pivot exists is the null space.
    """
    k = _check_symmetric(matrix)
    m: list[list[Fraction]] = [[Fraction(x) for x in row] for row in matrix]
    active = list(range(k))
    p = n = eta = 0
    while active:
        pivot = next((i for i in active if m[i][i]), None)
        if pivot is not None:
            d = m[pivot][pivot]
            if d > 0:
                p += 1
            else:
                n += 1
            rest = [i for i in active if i != pivot]
            prow = m[pivot]
            for i in rest:
                ci = m[i][pivot]
                if ci:
                    f = ci / d
                    mi = m[i]
                    for j in rest:
                        if prow[j]:
                            mi[j] -= f * prow[j]
            active = rest
            continue
        block = next(
            (
                (i, j)
                for i in active
                for j in active
                if i < j and m[i][j]
            ),
            None,
        )
        if block is None:
            eta += len(active)
            break
        bi, bj = block
        a = m[bi][bj]
        p += 1
        n += 1
        rest = [i for i in active if i != bi and i != bj]
        row_i, row_j = m[bi], m[bj]
        for i in rest:
            u, v = m[i][bi], m[i][bj]
            if u or v:
                mi = m[i]
                for j in rest:
                    w = v * row_i[j] + u * row_j[j]
                    if w:
                        mi[j] -= w / a
        active = rest
    return Inertia(p, n, eta)


# ---------------------------------------------------------------------------
# characteristic-polynomial route

IntPolynomial = list[int]  # coefficients, lowest degree first


def char_poly(matrix: Sequence[Sequence[Fraction | int]]) -> IntPolynomial:
    """Coefficients of det(xI - M), lowest degree first, exact integers.

    Uses the Faddeev-LeVerrier trace recurrence.  For an integer input
    matrix every intermediate matrix is integral and each division by the
    step index is exact, so the whole computation stays in Z.
    """
    k = len(matrix)
    a: list[list[int]] = []
    for i, row in enumerate(matrix):
        if len(row) != k:
            raise ValueError(f"matrix is not square: row {i} has {len(row)} entries")
        ints = []
        for x in row:
            f = Fraction(x)
            if f.denominator != 1:
                raise ValueError(f"characteristic polynomial needs integer entries, got {x}")
            ints.append(f.numerator)
        a.append(ints)
    if k == 0:
        return [1]
    coeffs_high_first = [1]  # leading coefficient of x^k
    m = [[1 if i == j else 0 for j in range(k)] for i in range(k)]  # M_0 = I
    for step in range(1, k + 1):
        # M_step = A @ (M_{step-1} + c_{step-1} I); c already folded into m
        prod = [
            [sum(a[i][t] * m[t][j] for t in range(k)) for j in range(k)]
            for i in range(k)
        ]
        trace = sum(prod[i][i] for i in range(k))
        q, r = divmod(-trace, step)
        if r:
            raise ArithmeticError("trace recurrence produced a non-integer coefficient")
        coeffs_high_first.append(q)
        m = [
            [prod[i][j] + (q if i == j else 0) for j in range(k)]
            for i in range(k)
        ]
    return list(reversed(coeffs_high_first))


def _sign_changes(coeffs: Sequence[int]) -> int:
    signs = [1 if c > 0 else -1 for c in coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def inertia_charpoly_oracle(matrix: Sequence[Sequence[Fraction | int]]) -> Inertia:
    """Inertia via the characteristic polynomial and Descartes' rule.

    Strip x^eta (eta = multiplicity of the zero eigenvalue), then count
    sign changes of q(x) for the positive eigenvalues and of q(-x) for
    the negative ones.  Exact because a symmetric matrix has only real
    eigenvalues.
    """
    _check_symmetric([[Fraction(x) for x in row] for row in matrix])
    coeffs = char_poly(matrix)
    eta = 0
    while eta < len(coeffs) and coeffs[eta] == 0:
        eta += 1
    q = coeffs[eta:]
    p = _sign_changes(q)
    n = _sign_changes([c if i % 2 == 0 else -c for i, c in enumerate(q)])
    return Inertia(p, n, eta)


# ---------------------------------------------------------------------------
# graph-level conveniences


def graph_inertia(g: Graph) -> Inertia:
    """Inertia of the adjacency matrix (congruence route)."""
    return inertia_congruence(adjacency_matrix(g))


def graph_inertia_oracle(g: Graph) -> Inertia:
    """Inertia of the adjacency matrix (characteristic-polynomial route)."""
    return inertia_charpoly_oracle(adjacency_matrix(g))


def graph_char_poly(g: Graph) -> IntPolynomial:
    return char_poly(adjacency_matrix(g))
