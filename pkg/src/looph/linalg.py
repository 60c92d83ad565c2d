"""
Exact sparse linear algebra over any field whose elements support + - * / and bool().

Vectors are dicts {column: value} with zero entries omitted; this works equally for
Fraction and for Scalar (rational functions).
"""

from __future__ import annotations

import bisect
from fractions import Fraction
from typing import Hashable, Iterable, Mapping

Vector = dict


def _axpy(target: dict, factor, row: Mapping) -> None:
    # target -= factor * row, dropping zeros
    for col, val in row.items():
        cur = target.get(col)
        new = -(factor * val) if cur is None else cur - factor * val
        if new:
            target[col] = new
        elif cur is not None:
            del target[col]


class Echelon:
    """
    Incrementally maintained row-echelon basis of a subspace.

    Column labels can be any sortable hashables; rows are normalized so each pivot is 1.
    """

    def __init__(self, key=None):
        self._key = key
        self._pivots: list = []
        self._rows: dict[Hashable, dict] = {}

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _sort_key(self, col):
        return self._key(col) if self._key else col

    def reduce(self, vec: Mapping) -> dict:
        """Residual of vec modulo the current span."""
        v = dict(vec)
        if not v:
            return v
        for col in self._pivots:
            val = v.get(col)
            if val:
                _axpy(v, val, self._rows[col])
        return v

    def add(self, vec: Mapping) -> bool:
        """Insert vec; return True if it enlarged the span."""
        v = self.reduce(vec)
        if not v:
            return False
        pivot = min(v, key=self._sort_key)
        inv = 1 / v[pivot]
        row = {c: x * inv for c, x in v.items()}
        keys = [self._sort_key(p) for p in self._pivots]
        self._pivots.insert(bisect.bisect(keys, self._sort_key(pivot)), pivot)
        self._rows[pivot] = row
        return True

    def extend(self, vecs: Iterable[Mapping]) -> int:
        return sum(1 for v in vecs if self.add(v))

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)

    def rows(self) -> list[dict]:
        return [self._rows[p] for p in self._pivots]

    def pivots(self) -> list:
        return list(self._pivots)


def rank(vectors: Iterable[Mapping]) -> int:
    ech = Echelon()
    ech.extend(vectors)
    return ech.rank


def nullspace(rows: Iterable[Mapping], columns: Iterable) -> list[dict]:
    """
    Basis of {x : row . x = 0 for every row}, for unknowns labelled by `columns`.
    """
    columns = list(columns)
    order = {c: k for k, c in enumerate(columns)}
    ech = Echelon(key=order.__getitem__)
    ech.extend(rows)
    # Back-substitute to reduced echelon form.
    pivots = ech.pivots()
    rref: dict = {}
    for p in reversed(pivots):
        row = dict(ech._rows[p])
        for q in list(row):
            if q != p and q in rref:
                _axpy(row, row[q], rref[q])
        rref[p] = row
    basis = []
    pivot_set = set(pivots)
    for free in columns:
        if free in pivot_set:
            continue
        vec = {free: 1}
        for p, row in rref.items():
            val = row.get(free)
            if val:
                vec[p] = -val
        basis.append(vec)
    return basis


def invert(matrix: list[list]) -> list[list]:
    """Inverse of a dense square matrix by Gauss-Jordan; raises ZeroDivisionError if singular."""
    size = len(matrix)
    aug = [list(row) + [1 if c == r else 0 for c in range(size)] for r, row in enumerate(matrix)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if aug[r][col]), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv if x else x for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x - factor * y if y else x for x, y in zip(aug[r], aug[col])]
    return [row[size:] for row in aug]
