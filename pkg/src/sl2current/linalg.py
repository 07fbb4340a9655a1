"""Sparse exact linear algebra over Q.

Vectors are dicts ``{column: Fraction}`` with integer column keys; zero
entries are never stored.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence

SparseVec = dict


def _axpy(row: dict, f: Fraction, pivot: Mapping) -> None:
    # row -= f * pivot, in place
    for k, v in pivot.items():
        nv = row.get(k, 0) - f * v
        if nv:
            row[k] = nv
        else:
            row.pop(k, None)


class Echelon:
    """Incrementally maintained row echelon basis of a subspace.

    Pivot rows are scaled so the pivot entry is 1 and every other entry sits
    in a larger column.
    """

    def __init__(self):
        self.pivots: dict[int, dict[int, Fraction]] = {}

    def __len__(self) -> int:
        return len(self.pivots)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _reduce_leading(self, row: dict) -> dict:
        while row:
            c = min(row)
            p = self.pivots.get(c)
            if p is None:
                break
            _axpy(row, row[c], p)
        return row

    def add(self, vec: Mapping[int, int | Fraction]) -> bool:
        """Insert ``vec``; return True if it enlarged the span."""
        row = {k: Fraction(v) for k, v in vec.items() if v}
        row = self._reduce_leading(row)
        if not row:
            return False
        c = min(row)
        lead = row[c]
        self.pivots[c] = {k: v / lead for k, v in row.items()}
        return True

    def extend(self, vecs: Iterable[Mapping]) -> int:
        return sum(self.add(v) for v in vecs)

    def normal_form(self, vec: Mapping[int, int | Fraction]) -> dict[int, Fraction]:
        """Reduce ``vec`` until no pivot column survives.

        The result is the canonical representative of ``vec`` modulo the span.
        """
        row = {k: Fraction(v) for k, v in vec.items() if v}
        heap = [k for k in row if k in self.pivots]
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            f = row.get(c)
            if not f:
                continue
            p = self.pivots[c]
            _axpy(row, f, p)
            for k in p:
                if k in self.pivots and k in row:
                    heapq.heappush(heap, k)
        return row

    def contains(self, vec: Mapping) -> bool:
        return not self.normal_form(vec)

    def basis(self) -> list[dict[int, Fraction]]:
        return [dict(self.pivots[c]) for c in sorted(self.pivots)]


def rank(rows: Iterable[Mapping]) -> int:
    e = Echelon()
    e.extend(rows)
    return e.rank


def kernel(images: Sequence[Mapping[Hashable, int | Fraction]]) -> list[dict[int, Fraction]]:
    """Null space of the linear map sending basis vector ``i`` to ``images[i]``.

    Returned vectors are sparse in the source coordinates.
    """
    cols: dict[Hashable, int] = {}
    for img in images:
        for k in img:
            if k not in cols:
                cols[k] = len(cols)
    n_target = len(cols)
    e = Echelon()
    out = []
    for i, img in enumerate(images):
        row = {cols[k]: Fraction(v) for k, v in img.items() if v}
        row[n_target + i] = Fraction(1)
        row = e._reduce_leading(row)
        c = min(row)
        lead = row[c]
        e.pivots[c] = {k: v / lead for k, v in row.items()}
        if c >= n_target:
            out.append({k - n_target: v for k, v in row.items()})
    # back-substitute so each kernel vector has its own clean leading entry
    ker = Echelon()
    for v in out:
        ker.add(v)
    return ker.basis()


def to_dense(vecs: Sequence[Mapping[int, Fraction]], ncols: int) -> list[list[Fraction]]:
    return [[Fraction(v.get(j, 0)) for j in range(ncols)] for v in vecs]


def format_matrix(rows: Sequence[Sequence[Fraction]]) -> str:
    """Row-major dump with ``p/q`` entries."""
    def fmt(x: Fraction) -> str:
        x = Fraction(x)
        return f"{x.numerator}/{x.denominator}"
    return "\n".join(" ".join(fmt(x) for x in row) for row in rows)
