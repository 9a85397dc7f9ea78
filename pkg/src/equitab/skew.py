"""Skew shapes, ribbons, and box diagonal diagrams.

Rows are numbered from the top throughout; the bottom-up numbering used by
the closed-form box diagonal construction is converted internally.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .compositions import composition, conjugate, partition


def _strip_zeros(parts):
    parts = list(parts)
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


@dataclass(frozen=True)
class SkewShape:
    """A pair of partitions outer/inner with inner contained in outer."""

    outer: tuple
    inner: tuple = ()

    def __post_init__(self):
        outer = partition(self.outer)
        inner = partition(_strip_zeros(self.inner)) if self.inner else ()
        if len(inner) > len(outer) or any(inner[i] > outer[i] for i in range(len(inner))):
            raise ValueError(f"inner shape {inner} not contained in outer {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def inner_padded(self) -> tuple:
        return self.inner + (0,) * (len(self.outer) - len(self.inner))

    def row_spans(self):
        """Per row (top down): (first column, last column), 1-based inclusive.

        Empty rows give (start, start - 1).
        """
        inner = self.inner_padded()
        return [(inner[i] + 1, self.outer[i]) for i in range(len(self.outer))]

    def row_lengths(self) -> tuple:
        inner = self.inner_padded()
        return tuple(self.outer[i] - inner[i] for i in range(len(self.outer)))

    def column_lengths(self) -> tuple:
        """Column lengths read left to right (empty columns dropped at the right)."""
        cols = [a - b for a, b in zip(conjugate(self.outer), conjugate(self.inner) if self.inner else ())]
        cols += list(conjugate(self.outer)[len(cols):])
        return _strip_zeros(cols)

    def cells(self) -> frozenset:
        """The set of (row, column) pairs, both 1-based, row 1 on top."""
        out = set()
        for i, (lo, hi) in enumerate(self.row_spans(), 1):
            for j in range(lo, hi + 1):
                out.add((i, j))
        return frozenset(out)

    def transpose(self) -> "SkewShape":
        return SkewShape(conjugate(self.outer), conjugate(self.inner))


def ribbon_to_skew(alpha) -> SkewShape:
    """The skew shape of the ribbon with row lengths alpha, top to bottom.

    Adjacent rows overlap in exactly one column.
    """
    alpha = composition(alpha)
    if not alpha:
        raise ValueError("the empty composition has no ribbon diagram")
    n = len(alpha)
    outer = []
    tail = 0
    for i in range(n - 1, -1, -1):
        tail += alpha[i]
        outer.append(tail - (n - 1 - i))
    outer.reverse()
    inner = tuple(outer[i + 1] - 1 for i in range(n - 1))
    return SkewShape(tuple(outer), _strip_zeros(inner))


def skew_to_ribbon(shape: SkewShape) -> tuple:
    """Row lengths of a connected ribbon shape; raises if the shape is not one."""
    alpha = shape.row_lengths()
    if not alpha or any(r == 0 for r in alpha):
        raise ValueError(f"{shape} is not a ribbon (empty row)")
    if ribbon_to_skew(alpha).row_spans() != _normalize_spans(shape):
        raise ValueError(f"{shape} is not a connected ribbon")
    return alpha


def _normalize_spans(shape: SkewShape):
    spans = shape.row_spans()
    shift = min(lo for lo, hi in spans if hi >= lo) - 1
    return [(lo - shift, hi - shift) for lo, hi in spans]


def transpose_ribbon(alpha) -> tuple:
    """Row lengths of the transposed ribbon: the column lengths of alpha."""
    return ribbon_to_skew(alpha).column_lengths()


def skew_union(s: SkewShape, t: SkewShape) -> SkewShape:
    """Pointwise maximum of outer shapes over pointwise maximum of inner shapes."""
    return SkewShape(_pointwise(max, s.outer, t.outer), _pointwise(max, s.inner, t.inner))


def skew_intersection(s: SkewShape, t: SkewShape) -> SkewShape:
    """Pointwise minimum of outer shapes over pointwise minimum of inner shapes."""
    return SkewShape(_pointwise(min, s.outer, t.outer), _pointwise(min, s.inner, t.inner))


def _pointwise(op, lam, mu):
    n = max(len(lam), len(mu))
    lam = tuple(lam) + (0,) * (n - len(lam))
    mu = tuple(mu) + (0,) * (n - len(mu))
    return _strip_zeros(op(a, b) for a, b in zip(lam, mu))


def box_diagonal(rows: int, cols: int) -> tuple:
    """Row lengths (top down) of the ribbon traced by the diagonal of a
    rows x cols grid, from the closed-form long-row/long-column positions."""
    if rows < 1 or cols < 1:
        raise ValueError("grid dimensions must be positive")
    if cols >= rows:
        return _diagonal_runs(rows, cols)[::-1]
    # tall grids: compute column lengths left to right, then flip the diagram
    col_comp = _diagonal_runs(cols, rows, from_top=True)
    return transpose_ribbon(col_comp)


def _diagonal_runs(short: int, long: int, from_top: bool = False):
    """Lengths of the `short` runs of the diagonal of a short x long grid.

    Returned bottom-up for row computations; `from_top` flips the marker set
    (long columns attach at index j+1 rather than j) and returns left-to-right
    column lengths.
    """
    base = -(-long // short)  # ceil(long / short)
    num = long - (base - 1) * short  # short * (1 - eps) as a fraction over short
    marks = set()
    for t in range(1, short):
        if from_top:
            pos = (t * short) // num + 1
            if 2 <= pos <= short:
                marks.add(pos)
        else:
            pos = -(-t * short // num)  # ceil
            if 1 <= pos <= short - 1:
                marks.add(pos)
    if from_top:
        lens = [base + (1 if j in marks else 0) for j in range(1, short + 1)]
    else:
        lens = [base + (1 if i in marks else 0) for i in range(1, short)] + [base]
    return tuple(lens)


def box_diagonal_geometric(rows: int, cols: int) -> tuple:
    """Row lengths (top down) of the same ribbon, from the exact rule: a cell
    belongs to the diagram when the grid diagonal meets its interior or its
    top-left corner.  All tests use exact rational arithmetic."""
    if rows < 1 or cols < 1:
        raise ValueError("grid dimensions must be positive")
    slope = Fraction(rows, cols)
    lengths = []
    for y in range(rows, 0, -1):  # top row first
        count = 0
        for x in range(1, cols + 1):
            left = slope * (x - 1)
            if (left < y and slope * x > y - 1) or left == y:
                count += 1
        lengths.append(count)
    return tuple(lengths)
