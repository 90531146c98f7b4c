"""Abelianization of a finitely presented group via Smith normal form."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .presentation import GroupPresentation

__all__ = [
    "IntegerMatrix",
    "SmithForm",
    "AbelianizationResult",
    "relation_matrix",
    "smith_normal_form",
    "abelianization",
]


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        entries = tuple(tuple(int(v) for v in row) for row in self.entries)
        if len(entries) != self.rows or any(len(row) != self.cols for row in entries):
            raise ValueError(f"entries do not form a {self.rows}x{self.cols} matrix")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntegerMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(tuple(r) for r in rows))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntegerMatrix:
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, size: int) -> IntegerMatrix:
        return cls(size, size, tuple(tuple(int(i == j) for j in range(size)) for i in range(size)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        cols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        return IntegerMatrix(
            self.rows,
            other.cols,
            tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.entries),
        )

    def transpose(self) -> IntegerMatrix:
        return IntegerMatrix(
            self.cols,
            self.rows,
            tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)),
        )

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


@dataclass(frozen=True)
class SmithForm:
    """``left @ A @ right`` is diagonal with entries ``diagonal`` then zeros."""

    diagonal: tuple[int, ...]
    left: IntegerMatrix
    right: IntegerMatrix

    @property
    def rank(self) -> int:
        return len(self.diagonal)

    def diagonal_matrix(self) -> IntegerMatrix:
        rows, cols = self.left.rows, self.right.cols
        return IntegerMatrix(
            rows,
            cols,
            tuple(
                tuple(self.diagonal[i] if i == j and i < self.rank else 0 for j in range(cols))
                for i in range(rows)
            ),
        )


@dataclass(frozen=True)
class AbelianizationResult:
    free_rank: int
    torsion: tuple[int, ...]

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = ["Z"] * (self.free_rank > 0)
        if self.free_rank > 1:
            parts = [f"Z^{self.free_rank}"]
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def relation_matrix(p: GroupPresentation) -> IntegerMatrix:
    """Entry ``(i, j)`` is the exponent sum of generator ``i`` in relator ``j``."""
    sums = [[0] * p.m for _ in range(p.n)]
    for j, rel in enumerate(p.relators):
        for g, s in rel:
            sums[g][j] += s
    return IntegerMatrix(p.n, p.m, tuple(tuple(r) for r in sums))


def smith_normal_form(matrix: IntegerMatrix) -> SmithForm:
    """Diagonalize by unimodular row and column operations.

    The pivot is always the nonzero entry of least absolute value in the
    unfinished block (ties: lowest row, then lowest column).
    """
    rows, cols = matrix.rows, matrix.cols
    a = matrix.tolist()
    left = [[int(i == j) for j in range(rows)] for i in range(rows)]
    right = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        left[i], left[k] = left[k], left[i]

    def swap_cols(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in right:
            row[j], row[k] = row[k], row[j]

    def add_row(dst, src, q):
        # row[dst] += q * row[src]
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        left[dst] = [x + q * y for x, y in zip(left[dst], left[src])]

    def add_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in right:
            row[dst] += q * row[src]

    diagonal = []
    t = 0
    while t < min(rows, cols):
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = a[i][j]
                if v and (pivot is None or abs(v) < pivot[0]):
                    pivot = (abs(v), i, j)
        if pivot is None:
            break
        _, i, j = pivot
        swap_rows(t, i)
        swap_cols(t, j)

        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    dirty = dirty or a[t][j] != 0
            if not dirty:
                # row and column cleared; enforce divisibility of the rest
                bad = next(
                    (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                add_row(t, bad, 1)
                continue
            # a remainder survived: move the smallest entry of row/col t to the pivot
            best = (abs(p), t, t)
            for i in range(t + 1, rows):
                if a[i][t] and abs(a[i][t]) < best[0]:
                    best = (abs(a[i][t]), i, t)
            for j in range(t + 1, cols):
                if a[t][j] and abs(a[t][j]) < best[0]:
                    best = (abs(a[t][j]), t, j)
            _, i, j = best
            swap_rows(t, i)
            swap_cols(t, j)

        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            left[t] = [-x for x in left[t]]
        diagonal.append(a[t][t])
        t += 1

    return SmithForm(
        tuple(diagonal),
        IntegerMatrix.from_rows(left, rows),
        IntegerMatrix.from_rows(right, cols),
    )


def abelianization(p: GroupPresentation) -> AbelianizationResult:
    """Z^n modulo the column span of the relation matrix."""
    snf = smith_normal_form(relation_matrix(p))
    return AbelianizationResult(
        free_rank=p.n - snf.rank,
        torsion=tuple(d for d in snf.diagonal if d > 1),
    )
