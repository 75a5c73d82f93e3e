"""Exact rational sparse linear algebra.

Every equality, kernel and quotient computation in the package goes through
this module. Scalars are :class:`fractions.Fraction`; nothing is ever a float.

Two layers are provided:

* :class:`SparseMatrix` with :func:`rref`, :func:`nullspace` and :func:`solve`
  over integer row/column positions;
* :class:`Subspace`, an incremental echelon basis over arbitrary hashable
  coordinates, used when vectors are keyed by algebra basis indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

Scalar = Fraction
Row = Dict[int, Fraction]


def as_scalar(value) -> Fraction:
    """Coerce ints, strings like ``"3/4"`` and Fractions to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating point scalars are not allowed")
    return Fraction(value)


class NoSolution(ArithmeticError):
    """Raised by :func:`solve` when the system is inconsistent."""


@dataclass(frozen=True)
class SparseMatrix:
    rows: int
    cols: int
    entries: Tuple[Tuple[int, int, Fraction], ...] = ()

    def __post_init__(self):
        merged: Dict[Tuple[int, int], Fraction] = {}
        for r, c, v in self.entries:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise IndexError(f"entry ({r}, {c}) outside {self.rows}x{self.cols}")
            if (r, c) in merged:
                raise ValueError(f"duplicate entry at ({r}, {c})")
            merged[(r, c)] = as_scalar(v)
        canon = tuple(sorted((r, c, v) for (r, c), v in merged.items() if v != 0))
        object.__setattr__(self, "entries", canon)

    @classmethod
    def from_dense(cls, data: Sequence[Sequence], cols: Optional[int] = None) -> "SparseMatrix":
        nrows = len(data)
        ncols = cols if cols is not None else (len(data[0]) if nrows else 0)
        entries = [(r, c, as_scalar(v)) for r, row in enumerate(data) for c, v in enumerate(row) if v != 0]
        return cls(nrows, ncols, tuple(entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Mapping[int, Fraction]], cols: int) -> "SparseMatrix":
        entries = [(r, c, v) for r, row in enumerate(rows) for c, v in row.items() if v != 0]
        return cls(len(rows), cols, tuple(entries))

    def row_dicts(self) -> List[Row]:
        out: List[Row] = [dict() for _ in range(self.rows)]
        for r, c, v in self.entries:
            out[r][c] = v
        return out

    def to_dense(self) -> List[List[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for r, c, v in self.entries:
            out[r][c] = v
        return out

    def matvec(self, vec: Sequence) -> List[Fraction]:
        if len(vec) != self.cols:
            raise ValueError(f"vector of length {len(vec)} against {self.cols} columns")
        out = [Fraction(0)] * self.rows
        for r, c, v in self.entries:
            out[r] += v * vec[c]
        return out


def _reduce_against(row: Row, pivots: Dict[int, Row]) -> Row:
    """Eliminate every pivot column of ``pivots`` from ``row`` (in place)."""
    # pivot rows vanish on each other's pivot columns, so one pass suffices
    for c in [k for k in row if k in pivots]:
        coef = row.get(c)
        if not coef:
            continue
        for k, v in pivots[c].items():
            nv = row.get(k, 0) - coef * v
            if nv:
                row[k] = nv
            else:
                row.pop(k, None)
    return row


def _echelon(rows: Iterable[Row]) -> Dict[int, Row]:
    """Fully reduced echelon basis: pivot column -> row with 1 at the pivot,
    zero in every other pivot column."""
    pivots: Dict[int, Row] = {}
    for src in rows:
        row = {c: as_scalar(v) for c, v in src.items() if v != 0}
        _reduce_against(row, pivots)
        if not row:
            continue
        p = min(row)
        inv = 1 / row[p]
        row = {c: v * inv for c, v in row.items()}
        for other in pivots.values():
            coef = other.get(p)
            if coef:
                for k, v in row.items():
                    nv = other.get(k, 0) - coef * v
                    if nv:
                        other[k] = nv
                    else:
                        other.pop(k, None)
        pivots[p] = row
    return pivots


def rref(m: SparseMatrix) -> Tuple[int, SparseMatrix, List[int]]:
    """Reduced row echelon form: ``(rank, reduced matrix, pivot columns)``.

    The reduced matrix keeps the shape of ``m``; zero rows go to the bottom.
    """
    pivots = _echelon(m.row_dicts())
    order = sorted(pivots)
    rows = [pivots[p] for p in order] + [dict() for _ in range(m.rows - len(order))]
    return len(order), SparseMatrix.from_rows(rows, m.cols), order


def nullspace(m: SparseMatrix) -> List[List[Fraction]]:
    """Basis of ``{v : m v = 0}``, one vector per free column in column order,
    with that free variable set to 1 and the other free variables 0."""
    pivots = _echelon(m.row_dicts())
    basis = []
    for f in range(m.cols):
        if f in pivots:
            continue
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for p, row in pivots.items():
            coef = row.get(f)
            if coef:
                v[p] = -coef
        basis.append(v)
    return basis


def solve(m: SparseMatrix, rhs: Sequence) -> List[Fraction]:
    """Solve ``m x = rhs`` choosing every free variable zero.

    Raises :class:`NoSolution` for inconsistent systems and ``ValueError`` on a
    dimension mismatch.
    """
    if len(rhs) != m.rows:
        raise ValueError(f"rhs of length {len(rhs)} against {m.rows} rows")
    aug = m.cols
    rows = m.row_dicts()
    for r, b in enumerate(rhs):
        b = as_scalar(b)
        if b:
            rows[r][aug] = b
    pivots = _echelon(rows)
    if aug in pivots:
        raise NoSolution("inconsistent linear system")
    x = [Fraction(0)] * m.cols
    for p, row in pivots.items():
        x[p] = row.get(aug, Fraction(0))
    return x


def rank(m: SparseMatrix) -> int:
    return len(_echelon(m.row_dicts()))


class Subspace:
    """Span of sparse vectors keyed by hashable coordinates.

    ``order`` fixes the column order used for pivoting; coordinates missing
    from it are appended in first-seen order. The basis is kept fully
    reduced, so :meth:`reduce` returns the canonical representative of a
    vector modulo the subspace.
    """

    def __init__(self, order: Sequence[Hashable] = (), vectors: Iterable[Mapping] = ()):
        self._pos: Dict[Hashable, int] = {}
        self._keys: List[Hashable] = []
        for k in order:
            self._position(k)
        self._pivots: Dict[int, Row] = {}
        for v in vectors:
            self.add(v)

    def _position(self, key: Hashable) -> int:
        pos = self._pos.get(key)
        if pos is None:
            pos = len(self._keys)
            self._pos[key] = pos
            self._keys.append(key)
        return pos

    def _encode(self, vec: Mapping) -> Row:
        return {self._position(k): as_scalar(v) for k, v in vec.items() if v != 0}

    def _decode(self, row: Row) -> Dict[Hashable, Fraction]:
        return {self._keys[c]: v for c, v in sorted(row.items())}

    def add(self, vec: Mapping) -> bool:
        """Insert ``vec``; return True if it enlarged the span."""
        row = _reduce_against(self._encode(vec), self._pivots)
        if not row:
            return False
        p = min(row)
        inv = 1 / row[p]
        row = {c: v * inv for c, v in row.items()}
        for other in self._pivots.values():
            coef = other.get(p)
            if coef:
                for k, v in row.items():
                    nv = other.get(k, 0) - coef * v
                    if nv:
                        other[k] = nv
                    else:
                        other.pop(k, None)
        self._pivots[p] = row
        return True

    @property
    def dim(self) -> int:
        return len(self._pivots)

    def reduce(self, vec: Mapping) -> Dict[Hashable, Fraction]:
        return self._decode(_reduce_against(self._encode(vec), self._pivots))

    def contains(self, vec: Mapping) -> bool:
        return not _reduce_against(self._encode(vec), self._pivots)

    def pivot_keys(self) -> List[Hashable]:
        return [self._keys[p] for p in sorted(self._pivots)]

    def basis(self) -> List[Dict[Hashable, Fraction]]:
        """Reduced basis, ordered by pivot position."""
        return [self._decode(self._pivots[p]) for p in sorted(self._pivots)]

    def coordinates(self, vec: Mapping) -> List[Fraction]:
        """Coordinates of ``vec`` in :meth:`basis`; raises NoSolution if
        ``vec`` is not in the span."""
        row = self._encode(vec)
        coords = [row.get(p, Fraction(0)) for p in sorted(self._pivots)]
        rest = dict(row)
        for c, p in zip(coords, sorted(self._pivots)):
            if c:
                for k, v in self._pivots[p].items():
                    nv = rest.get(k, 0) - c * v
                    if nv:
                        rest[k] = nv
                    else:
                        rest.pop(k, None)
        if rest:
            raise NoSolution("vector is not in the subspace")
        return coords
