"""Dense exact linear algebra over the rationals, sized for the small
dimensions (<= 64) this package works at.

Vectors are lists of Fractions/ints, matrices are lists of rows.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

Row = list


def _is_zero_row(row) -> bool:
    return all(x == 0 for x in row)


class RowSpace:
    """A subspace of Q^width kept in reduced row echelon form."""

    def __init__(self, width: int):
        self.width = width
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, vec) -> list[Fraction]:
        """Residue of vec modulo the subspace (pivot coordinates cleared)."""
        v = [Fraction(x) for x in vec]
        for row, p in zip(self.rows, self.pivots):
            if v[p]:
                c = v[p]
                for k in range(p, self.width):
                    v[k] -= c * row[k]
        return v

    def contains(self, vec) -> bool:
        return _is_zero_row(self.reduce(vec))

    def add(self, vec) -> bool:
        """Insert vec; returns True when the dimension grew."""
        v = self.reduce(vec)
        pivot = next((i for i, x in enumerate(v) if x), None)
        if pivot is None:
            return False
        inv = 1 / v[pivot]
        v = [x * inv for x in v]
        for row in self.rows:
            if row[pivot]:
                c = row[pivot]
                for k in range(pivot, self.width):
                    row[k] -= c * v[k]
        at = next((j for j, p in enumerate(self.pivots) if p > pivot), len(self.pivots))
        self.rows.insert(at, v)
        self.pivots.insert(at, pivot)
        return True


def rref(matrix) -> tuple[list[list[Fraction]], list[int]]:
    if not matrix:
        return [], []
    space = RowSpace(len(matrix[0]))
    for row in matrix:
        space.add(row)
    return space.rows, space.pivots


def matmul(A, B):
    n, mid, m = len(A), len(B), len(B[0]) if B else 0
    out = [[Fraction(0)] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        Oi = out[i]
        for k in range(mid):
            a = Ai[k]
            if a:
                Bk = B[k]
                for j in range(m):
                    if Bk[j]:
                        Oi[j] += a * Bk[j]
    return out

def matvec(A, v):
    return [sum((a * x for a, x in zip(row, v) if a and x), Fraction(0)) for row in A]


def identity_matrix(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def mat_sub_scalar(A, lam):
    """A - lam*I."""
    n = len(A)
    out = [[Fraction(x) for x in row] for row in A]
    for i in range(n):
        out[i][i] -= lam
    return out


def matpow(A, k):
    n = len(A)
    out = identity_matrix(n)
    base = [[Fraction(x) for x in row] for row in A]
    while k:
        if k & 1:
            out = matmul(out, base)
        base = matmul(base, base)
        k >>= 1
    return out


def solve_columns(cols: list[list], target) -> Optional[list[Fraction]]:
    """Coefficients c with sum(c_i * cols[i]) = target, or None."""
    if not cols:
        return [] if _is_zero_row(target) else None
    height = len(cols[0])
    # Row-reduce the transposed system with an augmented tail.
    aug = [[Fraction(cols[j][i]) for j in range(len(cols))] + [Fraction(target[i])]
           for i in range(height)]
    rows, pivots = rref(aug)
    ncols = len(cols)
    coeffs = [Fraction(0)] * ncols
    for row, p in zip(rows, pivots):
        if p == ncols:
            return None
        coeffs[p] = row[ncols]
    # Free variables stay 0; confirm the candidate really works.
    for i in range(height):
        if sum(coeffs[j] * cols[j][i] for j in range(ncols)) != target[i]:
            return None
    return coeffs


def invert(matrix) -> list[list[Fraction]]:
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(rows) != n:
        raise ValueError("matrix is singular")
    return [row[n:] for row in rows]


def kernel_basis(M) -> list[list[Fraction]]:
    """Basis of {x : Mx = 0}; M is a list of rows, domain = column count."""
    if not M:
        return []
    ncols = len(M[0])
    rows, pivots = rref(M)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, p in zip(rows, pivots):
            v[p] = -row[free]
        basis.append(v)
    return basis


def column_space_basis(M) -> list[list[Fraction]]:
    """Basis of the column space of M, as vectors of length len(M)."""
    if not M:
        return []
    ncols = len(M[0])
    cols = [[M[i][j] for i in range(len(M))] for j in range(ncols)]
    space = RowSpace(len(M))
    out = []
    for c in cols:
        if space.add(c):
            out.append([Fraction(x) for x in c])
    return out


def minimal_polynomial(M) -> list[Fraction]:
    """Monic minimal polynomial of the square matrix M, coefficients in
    ascending degree order."""
    n = len(M)
    flat_powers = [[Fraction(int(i == j)) for i in range(n) for j in range(n)]]
    power = identity_matrix(n)
    while True:
        power = matmul(power, M)
        flat = [power[i][j] for i in range(n) for j in range(n)]
        coeffs = solve_columns(flat_powers, flat)
        if coeffs is not None:
            return [-c for c in coeffs] + [Fraction(1)]
        flat_powers.append(flat)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _poly_eval(coeffs, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _deflate(coeffs, root: Fraction) -> list[Fraction]:
    """Synthetic division by (x - root); exact when root is a root."""
    out = [Fraction(0)] * (len(coeffs) - 1)
    acc = Fraction(0)
    for i in range(len(coeffs) - 1, 0, -1):
        acc = acc * root + coeffs[i]
        out[i - 1] = acc
    return out


def rational_roots(coeffs) -> tuple[list[tuple[Fraction, int]], list[Fraction]]:
    """All rational roots (with multiplicity) of the polynomial, plus the
    remaining factor after deflating them away."""
    poly = [Fraction(c) for c in coeffs]
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    roots: list[tuple[Fraction, int]] = []
    # Factor out x^k first.
    zero_mult = 0
    while len(poly) > 1 and poly[0] == 0:
        poly = poly[1:]
        zero_mult += 1
    if zero_mult:
        roots.append((Fraction(0), zero_mult))
    if len(poly) > 1:
        from math import lcm
        den = lcm(*[c.denominator for c in poly])
        ints = [int(c * den) for c in poly]
        candidates = set()
        for p in _divisors(ints[0]):
            for q in _divisors(ints[-1]):
                candidates.add(Fraction(p, q))
                candidates.add(Fraction(-p, q))
        for cand in sorted(candidates):
            mult = 0
            while len(poly) > 1 and _poly_eval(poly, cand) == 0:
                poly = _deflate(poly, cand)
                mult += 1
            if mult:
                roots.append((cand, mult))
    return roots, poly
