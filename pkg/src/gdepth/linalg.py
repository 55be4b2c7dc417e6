"""Exact row reduction over a coefficient field.

Dense reduced row-echelon form for small matrices, plus an incremental
sparse echelon (dict rows keyed by column) used wherever ranks and spans
are accumulated one vector at a time.  Lengths in the engine ultimately
reduce to coranks computed here.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Dict, List

from .fields import Field


@dataclass
class EchelonMatrix:
    """Reduced row-echelon form with its pivot columns."""

    rows: List[List]
    pivots: List[int]

    @property
    def rank(self) -> int:
        return len(self.pivots)


def row_reduce(matrix: List[List], field: Field) -> EchelonMatrix:
    """Return the reduced row-echelon form of a dense matrix.

    Deterministic; an empty matrix has rank 0.
    """
    rows = [list(r) for r in matrix]
    if not rows:
        return EchelonMatrix([], [])
    ncols = len(rows[0])
    zero = field.zero()
    pivots: List[int] = []
    out: List[List] = []
    for col in range(ncols):
        pivot_row = None
        for i, r in enumerate(rows):
            if r[col] != zero:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        r = rows.pop(pivot_row)
        inv = field.inv(r[col])
        r = [field.mul(inv, x) for x in r]
        for other in rows:
            c = other[col]
            if c != zero:
                for j in range(col, ncols):
                    other[j] = field.sub(other[j], field.mul(c, r[j]))
        for other in out:
            c = other[col]
            if c != zero:
                for j in range(col, ncols):
                    other[j] = field.sub(other[j], field.mul(c, r[j]))
        out.append(r)
        pivots.append(col)
        if not rows:
            break
    return EchelonMatrix(out, pivots)


def rank(matrix: List[List], field: Field) -> int:
    return row_reduce(matrix, field).rank


def nullspace(matrix: List[List], ncols: int, field: Field) -> List[List]:
    """Basis of {v : M v = 0} for a dense matrix with `ncols` columns."""
    ech = row_reduce(matrix, field)
    pivot_set = set(ech.pivots)
    free = [j for j in range(ncols) if j not in pivot_set]
    zero, one = field.zero(), field.one()
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for r, p in zip(ech.rows, ech.pivots):
            # pivot entry is 1; solve v[p] = -sum of free contributions
            v[p] = field.neg(r[f])
        basis.append(v)
    return basis


def intersect_spans(rows_u: List[List], rows_v: List[List],
                    field: Field) -> List[List]:
    """Basis of span(rows_u) ∩ span(rows_v) (Zassenhaus block trick)."""
    if not rows_u or not rows_v:
        return []
    n = len(rows_u[0])
    zero = field.zero()
    big = [list(u) + list(u) for u in rows_u]
    big += [list(v) + [zero] * n for v in rows_v]
    ech = row_reduce(big, field)
    return [r[n:] for r in ech.rows if all(x == zero for x in r[:n])]


def determinant(matrix: List[List], field: Field):
    """Determinant by cofactor expansion; oracle-grade, for tiny matrices."""
    n = len(matrix)
    if n == 0:
        return field.one()
    if n == 1:
        return matrix[0][0]
    total = field.zero()
    sign = field.one()
    for j in range(n):
        a = matrix[0][j]
        if a != field.zero():
            minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
            total = field.add(total, field.mul(field.mul(sign, a),
                                               determinant(minor, field)))
        sign = field.neg(sign)
    return total


class SparseEchelon:
    """Incremental echelon over sparse rows {column: coefficient}.

    Columns are compared by their natural (int or tuple) order; the pivot
    of a row is its smallest column.  Rows are kept monic and fully
    interreduced, so the pivot table is the canonical reduced basis of
    the accumulated span.
    """

    def __init__(self, field: Field):
        self.field = field
        self.pivots: Dict[object, Dict[object, object]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: Dict[object, object]) -> Dict[object, object]:
        """Fully reduce a sparse vector against the current basis."""
        fld = self.field
        zero = fld.zero()
        v = {c: x for c, x in vec.items() if x != zero}
        out: Dict[object, object] = {}
        while v:
            c = min(v)
            x = v.pop(c)
            row = self.pivots.get(c)
            if row is None:
                out[c] = x
                continue
            for rc, rx in row.items():
                if rc == c:
                    continue
                nx = fld.sub(v.get(rc, zero), fld.mul(x, rx))
                if nx == zero:
                    v.pop(rc, None)
                else:
                    v[rc] = nx
        return out

    def insert(self, vec: Dict[object, object]) -> bool:
        """Add a vector to the span; True if it enlarged the span."""
        fld = self.field
        zero = fld.zero()
        rem = self.reduce(vec)
        if not rem:
            return False
        c = min(rem)
        inv = fld.inv(rem[c])
        row = {rc: fld.mul(inv, rx) for rc, rx in rem.items()}
        # keep existing rows reduced against the new pivot
        for pc, prow in self.pivots.items():
            x = prow.get(c)
            if x is None:
                continue
            for rc, rx in row.items():
                nx = fld.sub(prow.get(rc, zero), fld.mul(x, rx))
                if nx == zero:
                    prow.pop(rc, None)
                else:
                    prow[rc] = nx
        self.pivots[c] = row
        return True

    def contains(self, vec: Dict[object, object]) -> bool:
        return not self.reduce(vec)
