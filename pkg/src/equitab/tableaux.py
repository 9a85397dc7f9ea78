"""Littlewood-Richardson tableau enumeration.

Cells are filled in reading order (rows top to bottom, each row right to
left) so the fill order *is* the reading word; the lattice condition is
maintained incrementally via running letter counts and a branch dies the
moment a prefix count would be violated.  Entries in row i never exceed i.
"""

from __future__ import annotations

from collections import Counter

from .compositions import composition
from .errors import ResourceLimitError
from .skew import SkewShape, ribbon_to_skew
from .vectors import SchurVector

CELL_LIMIT = 64


def _content_of(counts) -> tuple:
    out = []
    v = 1
    while counts[v]:
        out.append(counts[v])
        v += 1
    return tuple(out)


def _enumerate(shape: SkewShape, content, visit):
    """Drive `visit(arrays, counts)` once per LR filling of the shape.

    `arrays` holds the entries of each nonempty row (top to bottom, left to
    right); `counts[v]` is the multiplicity of v.  With `content` set, only
    fillings of exactly that content are produced.
    """
    spans = shape.row_spans()
    nrows = len(spans)
    rows = [(i, lo, hi) for i, (lo, hi) in enumerate(spans, 1) if hi >= lo]
    arrays = [[0] * (hi - lo + 1) for _, lo, hi in rows]
    counts = [0] * (nrows + 2)

    cap = None
    if content is not None:
        if sum(content) != shape.size:
            return
        cap = [0] * (nrows + 2)
        for v, c in enumerate(content, 1):
            if v > nrows:
                return
            cap[v] = c

    cells = []
    for idx, (orig, lo, hi) in enumerate(rows):
        arr = arrays[idx]
        prev_arr = prev_lo = prev_hi = None
        if idx > 0 and rows[idx - 1][0] == orig - 1:
            _, prev_lo, prev_hi = rows[idx - 1]
            prev_arr = arrays[idx - 1]
        for j in range(hi, lo - 1, -1):
            above = None
            if prev_arr is not None and prev_lo <= j <= prev_hi:
                above = (prev_arr, j - prev_lo)
            right_off = j - lo + 1 if j < hi else -1
            cells.append((arr, j - lo, above, right_off, orig))
    total = len(cells)

    def fill(k):
        if k == total:
            visit(arrays, counts)
            return
        arr, off, above, right_off, rowcap = cells[k]
        low = 1 if above is None else above[0][above[1]] + 1
        high = rowcap if right_off < 0 else min(rowcap, arr[right_off])
        for v in range(low, high + 1):
            if v > 1 and counts[v - 1] <= counts[v]:
                continue
            if cap is not None and counts[v] >= cap[v]:
                continue
            counts[v] += 1
            arr[off] = v
            fill(k + 1)
            counts[v] -= 1

    fill(0)


def lr_expand(shape: SkewShape, max_cells: int = CELL_LIMIT) -> SchurVector:
    """Schur expansion of the skew Schur function of the shape: the content
    multiset of its LR tableaux.  Disconnected shapes are supported."""
    if shape.size > max_cells:
        raise ResourceLimitError(f"shape has {shape.size} cells, guard is {max_cells}")
    out = Counter()

    def visit(arrays, counts):
        out[_content_of(counts)] += 1

    if shape.size == 0:
        return SchurVector({(): 1})
    _enumerate(shape, None, visit)
    return SchurVector(out)


def lr_fillings(shape: SkewShape, content=None) -> list:
    """All LR fillings as tuples of row tuples, aligned with the shape's rows
    (empty rows give empty tuples)."""
    spans = shape.row_spans()
    slot = []
    k = 0
    for lo, hi in spans:
        slot.append(k if hi >= lo else None)
        if hi >= lo:
            k += 1
    result = []

    def visit(arrays, counts):
        result.append(tuple(tuple(arrays[s]) if s is not None else () for s in slot))

    _enumerate(shape, content, visit)
    return result


def lex_largest_content(shape: SkewShape) -> tuple:
    """Content of the filling whose columns read 1, 2, 3, ... downward; the
    lexicographically largest content with a nonzero coefficient."""
    if shape.size == 0:
        raise ValueError("the empty shape has no filling")
    cols = shape.column_lengths()
    top = max(cols)
    return tuple(sum(1 for c in cols if c >= i) for i in range(1, top + 1))


def row_restriction_holds(filling, i: int) -> bool:
    """The row-i condition singling out LR tableaux of a ribbon that are not
    images of the first-row cell-moving injection: if the first cell of row i
    is a 1, then row i must not be the last row and the entry to the right of
    that 1 must be at least the entry below it."""
    last = len(filling)
    row = filling[i - 1]
    if row[0] != 1:
        return True
    if i == last:
        return False
    if len(row) == 1:
        return True
    return row[1] >= filling[i][-1]


def _check_row_index(beta, i):
    if not 2 <= i <= len(beta):
        raise ValueError(f"row index {i} out of range for {beta}")


def restricted_vectors(beta, indices, content=None) -> dict:
    """For each i in indices, the content counter over LR tableaux of the
    ribbon beta satisfying the row-i restriction.  Single enumeration."""
    beta = composition(beta)
    indices = tuple(indices)
    for i in indices:
        _check_row_index(beta, i)
    last = len(beta)
    counters = {i: Counter() for i in indices}

    def visit(arrays, counts):
        nu = _content_of(counts)
        for i in indices:
            row = arrays[i - 1]
            if row[0] != 1:
                counters[i][nu] += 1
            elif i < last and (len(row) == 1 or row[1] >= arrays[i][-1]):
                counters[i][nu] += 1

    _enumerate(ribbon_to_skew(beta), content, visit)
    return counters


def restricted_pair_vectors(beta, pairs, content=None) -> dict:
    """Content counters over LR tableaux satisfying both row restrictions of
    each (i, j) pair.  Single enumeration."""
    beta = composition(beta)
    pairs = [tuple(p) for p in pairs]
    for i, j in pairs:
        _check_row_index(beta, i)
        _check_row_index(beta, j)
    last = len(beta)
    counters = {p: Counter() for p in pairs}

    def holds(arrays, i):
        row = arrays[i - 1]
        if row[0] != 1:
            return True
        return i < last and (len(row) == 1 or row[1] >= arrays[i][-1])

    def visit(arrays, counts):
        nu = _content_of(counts)
        for i, j in pairs:
            if holds(arrays, i) and holds(arrays, j):
                counters[(i, j)][nu] += 1

    _enumerate(ribbon_to_skew(beta), content, visit)
    return counters


def restricted_count(beta, i, nu) -> int:
    return restricted_vectors(beta, [i], content=tuple(nu))[i][tuple(nu)]


def restricted_count2(beta, i, j, nu) -> int:
    return restricted_pair_vectors(beta, [(i, j)], content=tuple(nu))[(i, j)][tuple(nu)]


def restricted_vector(beta, i) -> SchurVector:
    return SchurVector(restricted_vectors(beta, [i])[i])


def restricted_vector2(beta, i, j) -> SchurVector:
    return SchurVector(restricted_pair_vectors(beta, [(i, j)])[(i, j)])


def comfortable_split(alpha, a: int, nu) -> tuple:
    """Counts (comfortable, uncomfortable) of LR tableaux of the equitable
    ribbon alpha with content nu.  Comfortable: every long row contains a 1
    and every long intermediate row contains two 1's."""
    alpha = composition(alpha)
    if a < 2:
        raise ValueError("comfortable tableaux are defined for short length at least 2")
    if any(part not in (a, a + 1) for part in alpha):
        raise ValueError(f"{alpha} is not an equitable ribbon with short length {a}")
    last = len(alpha)
    tallies = [0, 0]  # comfortable, uncomfortable

    def visit(arrays, counts):
        for k in range(last):
            if alpha[k] == a + 1:
                row = arrays[k]
                ones = 0
                for v in row:
                    if v != 1:
                        break
                    ones += 1
                if ones < (2 if 0 < k < last - 1 else 1):
                    tallies[1] += 1
                    return
        tallies[0] += 1

    _enumerate(ribbon_to_skew(alpha), tuple(nu), visit)
    return tallies[0], tallies[1]
