"""Integer translate-table matrices and exact linear algebra over Z.

The translate table of a multiset I has row i equal to the multiplicity
vector of I + g_i, so entry (i, j) is the count of g_j inside I + g_i.
Translation and dilation act on it through permutation matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NotAUnit, NotCyclic
from .groups import ElementLike, Group
from .multisets import GroupMultiset


@dataclass(frozen=True)
class AdjacencyMatrix:
    """Square integer matrix indexed by the canonical element order."""

    group: Group
    entries: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def __matmul__(self, other: "AdjacencyMatrix") -> "AdjacencyMatrix":
        if other.group != self.group:
            raise ValueError("matrix groups differ")
        n = self.size
        cols = list(zip(*other.entries))
        rows = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
            for row in self.entries
        )
        return AdjacencyMatrix(self.group, rows)

    def transpose(self) -> "AdjacencyMatrix":
        return AdjacencyMatrix(self.group, tuple(zip(*self.entries)))


def adjacency_matrix(ms: GroupMultiset) -> AdjacencyMatrix:
    """Row i is the multiplicity vector of the translate by the i-th element."""
    rows = tuple(
        ms.translate(g).mult for g in ms.group.elements
    )
    return AdjacencyMatrix(ms.group, rows)


def _permutation_matrix(group: Group, perm: tuple[int, ...]) -> AdjacencyMatrix:
    n = group.order
    rows = []
    for i in range(n):
        row = [0] * n
        row[perm[i]] = 1
        rows.append(tuple(row))
    return AdjacencyMatrix(group, tuple(rows))


def translation_matrix(group: Group, g: ElementLike) -> AdjacencyMatrix:
    """Permutation matrix P with P @ table(I) == table(I + g)."""
    return _permutation_matrix(group, group.permutation_of_add(g))


def dilation_matrix(group: Group, t: int) -> AdjacencyMatrix:
    """Permutation matrix Q with Q.T @ table(I) @ Q == table(t * I)."""
    if math.gcd(t, group.exponent) != 1:
        raise NotAUnit(f"{t} is not a unit modulo {group.exponent}")
    return _permutation_matrix(group, group.permutation_of_mul(t))


def integer_determinant(rows: tuple[tuple[int, ...], ...]) -> int:
    """Exact determinant by fraction-free elimination with row pivoting."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact by construction: prev divides every 2x2 minor here
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def is_invertible(matrix: AdjacencyMatrix) -> bool:
    """Whether the matrix is invertible over the rationals."""
    return integer_determinant(matrix.entries) != 0


def circulant_invertible(ms: GroupMultiset) -> bool:
    """Invertibility of the translate table of a rank-1 multiset, decided
    through polynomials: the table is circulant with representer
    P(x) = sum_j mult[(-j) mod l] * x^j, and it is invertible exactly when
    gcd(P, x^l - 1) is constant.
    """
    group = ms.group
    if group.rank != 1:
        raise NotCyclic(f"circulant test needs a rank-1 group, got {group}")
    l = group.order
    column = [ms.mult[(-j) % l] for j in range(l)]
    modpoly = [-1] + [0] * (l - 1) + [1]
    return _poly_gcd_degree(column, modpoly) == 0


def _strip(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _primitive(p: list[int]) -> list[int]:
    content = 0
    for c in p:
        content = math.gcd(content, c)
    if content > 1:
        return [c // content for c in p]
    return p


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """Remainder of lc(b)^k * a divided by b, coefficients staying integral."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        da = len(a) - 1
        coef = a[-1]
        a = [lb * c for c in a]
        for i in range(db + 1):
            a[da - db + i] -= coef * b[i]
        a = _strip(a)
    return a


def _poly_gcd_degree(p: list[int], q: list[int]) -> int:
    """Degree of gcd(p, q) over the rationals; -1 when both are zero."""
    a = _strip(list(p))
    b = _strip(list(q))
    if len(a) < len(b):
        a, b = b, a
    while b:
        a = _primitive(a)
        b = _primitive(b)
        r = _pseudo_rem(a, b)
        a, b = b, r
    if not a:
        return -1
    return len(a) - 1
