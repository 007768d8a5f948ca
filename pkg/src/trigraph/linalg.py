"""Exact sparse linear algebra over the rationals.

Everything here works on ``fractions.Fraction`` entries stored in
dictionaries, so results are exact and independent of floating point.
Rows are processed in index order and entries in column order, which makes
every output reproducible bit-for-bit.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from typing import Dict, List, Tuple, Union

SparseVector = Dict[int, Fraction]
VectorLike = Union[Sequence, Mapping]


class DimensionMismatchError(ValueError):
    """Vectors of different lengths were combined."""


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class SparseMatrix:
    """Rational matrix holding only its nonzero entries."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Mapping[Tuple[int, int], object] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix shape must be nonnegative")
        self.rows = rows
        self.cols = cols
        self._entries: Dict[Tuple[int, int], Fraction] = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexError(f"entry ({i}, {j}) outside {rows}x{cols} matrix")
            v = _frac(v)
            if v:
                self._entries[(i, j)] = v

    @classmethod
    def from_rows(cls, rows: Sequence[VectorLike], cols: int | None = None) -> "SparseMatrix":
        """Build from dense sequences or sparse ``{col: value}`` mappings.

        ``cols`` is required when every row is a mapping.
        """
        rows = list(rows)
        if cols is None:
            lengths = {len(r) for r in rows if not isinstance(r, Mapping)}
            if len(lengths) > 1:
                raise DimensionMismatchError(f"ragged rows with lengths {sorted(lengths)}")
            if not lengths:
                if rows:
                    raise ValueError("cols must be given for purely sparse rows")
                return cls(0, 0)
            cols = lengths.pop()
        entries = {}
        for i, r in enumerate(rows):
            if isinstance(r, Mapping):
                items = r.items()
            else:
                if len(r) != cols:
                    raise DimensionMismatchError(f"row {i} has length {len(r)}, expected {cols}")
                items = enumerate(r)
            for j, v in items:
                entries[(i, j)] = v
        return cls(len(rows), cols, entries)

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    def entries(self) -> Dict[Tuple[int, int], Fraction]:
        return dict(self._entries)

    def __getitem__(self, key: Tuple[int, int]) -> Fraction:
        return self._entries.get(key, Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (self.rows, self.cols, self._entries) == (other.rows, other.cols, other._entries)

    def __repr__(self) -> str:
        return f"SparseMatrix({self.rows}, {self.cols}, nnz={len(self._entries)})"

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, {(j, i): v for (i, j), v in self._entries.items()})

    def row_dicts(self) -> List[SparseVector]:
        out: List[SparseVector] = [{} for _ in range(self.rows)]
        for (i, j) in sorted(self._entries):
            out[i][j] = self._entries[(i, j)]
        return out

    def to_dense(self) -> List[List[Fraction]]:
        dense = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (i, j), v in self._entries.items():
            dense[i][j] = v
        return dense


def _bits(x: Fraction) -> int:
    return x.numerator.bit_length() + x.denominator.bit_length()


def _axpy(target: SparseVector, coeff: Fraction, source: SparseVector) -> None:
    """target -= coeff * source, dropping cancelled entries."""
    for j, v in source.items():
        nv = target.get(j, 0) - coeff * v
        if nv:
            target[j] = nv
        else:
            target.pop(j, None)


class Echelon:
    """Incremental row echelon basis.

    Each accepted row is reduced against all earlier pivot rows, so pivot
    columns never reappear; the pivot entry of a new row is the one with the
    smallest bit size (ties broken by column).
    """

    def __init__(self):
        self.pivots: List[Tuple[int, SparseVector]] = []

    def reduce(self, row: Mapping[int, object]) -> SparseVector:
        r = {j: _frac(v) for j, v in row.items() if v}
        for col, prow in self.pivots:
            c = r.get(col)
            if c:
                _axpy(r, c, prow)
        return r

    def add(self, row: Mapping[int, object]) -> bool:
        """Insert ``row``; return True if it was independent of earlier rows."""
        r = self.reduce(row)
        if not r:
            return False
        col = min(r, key=lambda j: (_bits(r[j]), j))
        inv = 1 / r[col]
        self.pivots.append((col, {j: v * inv for j, v in r.items()}))
        return True

    def contains(self, row: Mapping[int, object]) -> bool:
        return not self.reduce(row)

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rank(m: SparseMatrix) -> int:
    ech = Echelon()
    for row in m.row_dicts():
        ech.add(row)
    return ech.rank


def rref(m: SparseMatrix) -> Tuple[List[SparseVector], List[int]]:
    """Reduced row echelon form with leftmost pivots.

    Returns the nonzero rows (pivot entry 1, pivot columns cleared elsewhere)
    sorted by pivot column, together with the pivot columns.
    """
    basis: Dict[int, SparseVector] = {}
    for row in m.row_dicts():
        r = dict(row)
        for col in sorted(basis):
            c = r.get(col)
            if c:
                _axpy(r, c, basis[col])
        if not r:
            continue
        col = min(r)
        inv = 1 / r[col]
        r = {j: v * inv for j, v in r.items()}
        for other in basis.values():
            c = other.get(col)
            if c:
                _axpy(other, c, r)
        basis[col] = r
    cols = sorted(basis)
    return [basis[c] for c in cols], cols


def kernel_basis(m: SparseMatrix) -> List[SparseVector]:
    """Right null space basis, one vector per free column in increasing order."""
    rows, pivots = rref(m)
    pivot_set = set(pivots)
    out = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        vec: SparseVector = {free: Fraction(1)}
        for prow, pcol in zip(rows, pivots):
            c = prow.get(free)
            if c:
                vec[pcol] = -c
        out.append(dict(sorted(vec.items())))
    return out


def span_dimension(vectors: Iterable[VectorLike], length: int | None = None) -> int:
    """Dimension of the span of ``vectors``.

    Dense sequences must share one length; sparse mappings need ``length``
    only if you want indices range-checked.
    """
    vectors = list(vectors)
    if not vectors:
        return 0
    dense_lengths = {len(v) for v in vectors if not isinstance(v, Mapping)}
    if len(dense_lengths) > 1 or (length is not None and dense_lengths and dense_lengths != {length}):
        raise DimensionMismatchError(f"vectors have lengths {sorted(dense_lengths)}")
    ech = Echelon()
    for v in vectors:
        if isinstance(v, Mapping):
            if length is not None and any(not 0 <= j < length for j in v):
                raise DimensionMismatchError("sparse index out of range")
            ech.add(v)
        else:
            ech.add(dict(enumerate(v)))
    return ech.rank


def rank_of_vectors(vectors: Iterable[Mapping]) -> int:
    """Rank of sparse vectors keyed by arbitrary sortable labels."""
    vectors = list(vectors)
    labels = sorted({k for v in vectors for k in v})
    index = {k: i for i, k in enumerate(labels)}
    return span_dimension([{index[k]: c for k, c in v.items()} for v in vectors])


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> List[List[Fraction]]:
    """Dense product, skipping zero entries of ``a``."""
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [Fraction(0)] * cols
        for k, x in enumerate(row):
            if x:
                bk = b[k]
                for j in range(cols):
                    if bk[j]:
                        acc[j] += x * bk[j]
        out.append(acc)
    return out


def mat_inverse(a: Sequence[Sequence]) -> List[List[Fraction]]:
    """Gauss-Jordan inverse of a square rational matrix."""
    n = len(a)
    aug = [[_frac(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        p = next((r for r in range(c, n) if aug[r][c]), None)
        if p is None:
            raise ZeroDivisionError("matrix is singular")
        aug[c], aug[p] = aug[p], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]
