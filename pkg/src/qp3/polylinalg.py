"""Matrices over the polynomial ring and over Q(i): determinants, minors,
exact row reduction and nullspaces."""

from __future__ import annotations

from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from .gaussian import GaussianRational, ONE, ZERO, gr
from .multipoly import Polynomial, VarSetMismatchError


class PolyMatrix:
    """Dense rectangular matrix whose entries are Polynomials on one VarSet."""

    __slots__ = ("rows", "cols", "entries", "varset")

    def __init__(self, entries: Sequence[Sequence[Polynomial]]):
        entries = [list(row) for row in entries]
        if not entries or not entries[0]:
            raise ValueError("matrix must be non-empty")
        cols = len(entries[0])
        varset = entries[0][0].varset
        for row in entries:
            if len(row) != cols:
                raise ValueError("ragged matrix")
            for e in row:
                if e.varset != varset:
                    raise VarSetMismatchError("matrix entries on different VarSets")
        self.rows = len(entries)
        self.cols = cols
        self.entries = entries
        self.varset = varset

    def __getitem__(self, idx: Tuple[int, int]) -> Polynomial:
        return self.entries[idx[0]][idx[1]]

    def row(self, k: int) -> List[Polynomial]:
        return list(self.entries[k])

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix([[self.entries[r][c] for c in col_idx] for r in row_idx])

    def det(self) -> Polynomial:
        """Determinant by expansion over column subsets, memoized.

        Entries here are low-degree and sparse, so the 2^n dynamic program
        beats fraction-free elimination while staying exact.
        """
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        zero = Polynomial.zero(self.varset, self.entries[0][0].order)
        one = Polynomial.constant(self.varset, 1, self.entries[0][0].order)
        # state: frozen set of used columns (as bitmask) after placing rows 0..k-1
        level: Dict[int, Polynomial] = {0: one}
        for r in range(n):
            nxt: Dict[int, Polynomial] = {}
            for mask, val in level.items():
                # expanding along row r: the sign for placing it in a free
                # column c is (-1)^(number of used columns greater than c)
                sign = 1 if bin(mask).count("1") % 2 == 0 else -1
                for c in range(n):
                    bit = 1 << c
                    if mask & bit:
                        sign = -sign
                        continue
                    e = self.entries[r][c]
                    if e.is_zero():
                        continue
                    contrib = e * val if sign > 0 else -(e * val)
                    key = mask | bit
                    acc = nxt.get(key)
                    nxt[key] = contrib if acc is None else acc + contrib
            level = nxt
            if not level:
                return zero
        return level.get((1 << n) - 1, zero)

    def det_bareiss(self) -> Polynomial:
        """Fraction-free Gaussian elimination determinant (cross-check oracle)."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        order = self.entries[0][0].order
        one = Polynomial.constant(self.varset, 1, order)
        a = [[self.entries[r][c] for c in range(n)] for r in range(n)]
        prev = one
        sign = 1
        for k in range(n - 1):
            if a[k][k].is_zero():
                for r in range(k + 1, n):
                    if not a[r][k].is_zero():
                        a[k], a[r] = a[r], a[k]
                        sign = -sign
                        break
                else:
                    return Polynomial.zero(self.varset, order)
            for r in range(k + 1, n):
                for c in range(k + 1, n):
                    num = a[r][c] * a[k][k] - a[r][k] * a[k][c]
                    a[r][c] = poly_exact_div(num, prev)
                a[r][k] = Polynomial.zero(self.varset, order)
            prev = a[k][k]
        d = a[n - 1][n - 1]
        return d if sign > 0 else -d


def poly_exact_div(f: Polynomial, g: Polynomial) -> Polynomial:
    """Exact quotient f/g; raises ValueError if g does not divide f."""
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if f.is_zero():
        return f
    varset, order = f.varset, f.order
    lm_g = g.leading_monomial()
    lc_g_inv = g.leading_coefficient().inverse()
    quotient: Dict[Tuple[int, ...], GaussianRational] = {}
    rem = f
    while not rem.is_zero():
        lm = rem.leading_monomial()
        diff = tuple(a - b for a, b in zip(lm, lm_g))
        if any(e < 0 for e in diff):
            raise ValueError("not an exact polynomial division")
        c = rem.leading_coefficient() * lc_g_inv
        quotient[diff] = c
        rem = rem - Polynomial(varset, {diff: c}, order) * g
    return Polynomial(varset, quotient, order)


def minor(m: PolyMatrix, row_idx: Sequence[int], col_idx: Sequence[int]) -> Polynomial:
    """Determinant of the selected square submatrix."""
    if len(row_idx) != len(col_idx):
        raise ValueError("minor needs equally many rows and columns")
    for r in row_idx:
        if not 0 <= r < m.rows:
            raise IndexError(f"row index {r} out of range")
    for c in col_idx:
        if not 0 <= c < m.cols:
            raise IndexError(f"column index {c} out of range")
    return m.submatrix(row_idx, col_idx).det()


def all_minors(m: PolyMatrix, k: int) -> List[Polynomial]:
    """All k x k minors, row sets and column sets in lexicographic order."""
    if k > min(m.rows, m.cols):
        raise IndexError("minor size exceeds matrix dimensions")
    out = []
    for rows in combinations(range(m.rows), k):
        for cols in combinations(range(m.cols), k):
            out.append(minor(m, rows, cols))
    return out


def minor_index_sets(m: PolyMatrix, k: int):
    return [
        (rows, cols)
        for rows in combinations(range(m.rows), k)
        for cols in combinations(range(m.cols), k)
    ]


class ScalarMatrix:
    """Rectangular matrix over Q(i) with exact row reduction."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[GaussianRational]]):
        entries = [[c if isinstance(c, GaussianRational) else gr(c) for c in row]
                   for row in entries]
        if not entries:
            raise ValueError("matrix must have at least one row")
        cols = len(entries[0])
        for row in entries:
            if len(row) != cols:
                raise ValueError("ragged matrix")
        self.rows = len(entries)
        self.cols = cols
        self.entries = entries

    @staticmethod
    def zero(rows: int, cols: int) -> "ScalarMatrix":
        return ScalarMatrix([[ZERO] * cols for _ in range(rows)])

    def rref(self) -> Tuple["ScalarMatrix", List[int]]:
        """Reduced row echelon form and the list of pivot columns."""
        a = [row[:] for row in self.entries]
        pivots: List[int] = []
        r = 0
        for c in range(self.cols):
            pivot_row = None
            for rr in range(r, self.rows):
                if not a[rr][c].is_zero():
                    pivot_row = rr
                    break
            if pivot_row is None:
                continue
            a[r], a[pivot_row] = a[pivot_row], a[r]
            inv = a[r][c].inverse()
            a[r] = [x * inv for x in a[r]]
            for rr in range(self.rows):
                if rr != r and not a[rr][c].is_zero():
                    f = a[rr][c]
                    a[rr] = [x - f * y for x, y in zip(a[rr], a[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return ScalarMatrix(a), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> List[List[GaussianRational]]:
        """Canonical basis of the right nullspace.

        One vector per free column, in increasing column order, with a 1 in
        its free coordinate; this makes downstream fixtures deterministic.
        """
        red, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        basis = []
        for fc in free:
            v = [ZERO] * self.cols
            v[fc] = ONE
            for r, pc in enumerate(pivots):
                coeff = red.entries[r][fc]
                if not coeff.is_zero():
                    v[pc] = -coeff
            basis.append(v)
        return basis

    def mul_vector(self, v: Sequence[GaussianRational]) -> List[GaussianRational]:
        out = []
        for row in self.entries:
            acc = ZERO
            for x, y in zip(row, v):
                acc = acc + x * y
            out.append(acc)
        return out

    def solve(self, rhs: Sequence[GaussianRational]):
        """One exact solution of A x = rhs, or None if inconsistent."""
        aug = ScalarMatrix([row + [b] for row, b in zip(self.entries, rhs)])
        red, pivots = aug.rref()
        if self.cols in pivots:
            return None
        x = [ZERO] * self.cols
        for r, pc in enumerate(pivots):
            x[pc] = red.entries[r][self.cols]
        return x
