"""Coarsenings of compositions, profiles of equitable ribbons, and the
related counting operations."""

from __future__ import annotations

from collections import Counter

from .compositions import choose, composition, sort_to_partition
from .errors import ResourceLimitError
from .skew import ribbon_to_skew

# Beyond this length the full merge-subset enumeration is refused and only
# pair-merge shaped queries are answered by direct counting.
ENUM_LENGTH_LIMIT = 24


def coarsenings(alpha) -> Counter:
    """Multiset of partitions from all 2^(len-1) ways to merge adjacent parts."""
    alpha = composition(alpha)
    if not alpha:
        return Counter({(): 1})
    n = len(alpha)
    out = Counter()
    for mask in range(1 << (n - 1)):
        parts = []
        run = alpha[0]
        for gap in range(n - 1):
            if mask >> gap & 1:
                run += alpha[gap + 1]
            else:
                parts.append(run)
                run = alpha[gap + 1]
        parts.append(run)
        parts.sort(reverse=True)
        out[tuple(parts)] += 1
    return out


def multiplicity(alpha, lam) -> int:
    """Number of coarsenings of alpha whose sorted parts equal lam.

    Short compositions are counted by a pruned walk over merge choices; for
    longer ones only pair-merge targets (k disjoint adjacent equal pairs in a
    two-valued composition) are supported, counted directly per run.
    """
    alpha = composition(alpha)
    lam = tuple(lam)
    if sum(alpha) != sum(lam):
        return 0
    if not alpha:
        return 1 if lam == () else 0
    if len(alpha) <= ENUM_LENGTH_LIMIT:
        return _multiplicity_walk(alpha, lam)
    form = _pair_merge_form(alpha, lam)
    if form is None:
        raise ResourceLimitError(
            f"composition of length {len(alpha)} exceeds the enumeration limit "
            f"and {lam} is not a pair-merge target"
        )
    a, k = form
    return pair_merge_count(profile(alpha, a), k)


def _multiplicity_walk(alpha, lam) -> int:
    need = Counter(lam)
    cap = max(lam) if lam else 0
    n = len(alpha)

    def walk(i, run):
        if i == n:
            return 1 if need[run] > 0 else 0
        count = 0
        if run + alpha[i] <= cap:
            count += walk(i + 1, run + alpha[i])
        if need[run] > 0:
            need[run] -= 1
            count += walk(i + 1, alpha[i])
            need[run] += 1
        return count

    return walk(1, alpha[0])


def _pair_merge_form(alpha, lam):
    """Detect lam = (2a)^k joined-pairs target for a two-valued alpha; returns
    (a, k) or None."""
    values = set(alpha)
    low = min(values)
    for a in ({low} if values != {low} else {low, max(low - 1, 1)}):
        if values - {a, a + 1}:
            continue
        n = sum(1 for p in alpha if p == a + 1)
        m = len(alpha) - n
        counts = Counter(lam)
        k = counts[2 * a] - (n if 2 * a == a + 1 else 0)
        if k < 0 or 2 * k > m:
            continue
        expect = Counter([2 * a] * k + [a + 1] * n + [a] * (m - 2 * k))
        if expect == counts:
            return a, k
    return None


def pair_merge_count(runs, k: int) -> int:
    """Ways to merge k disjoint adjacent equal pairs, with the equal items
    arranged in runs of the given lengths: sum over distributions of the
    per-run disjoint-pair counts."""
    table = [0] * (k + 1)
    table[0] = 1
    for run in runs:
        nxt = [0] * (k + 1)
        for used in range(k + 1):
            if table[used]:
                for extra in range(min(k - used, run // 2) + 1):
                    nxt[used + extra] += table[used] * choose(run - extra, extra)
        table = nxt
    return table[k]


def profile(alpha, a: int) -> tuple:
    """Run lengths of short rows (value a) delimited by long rows (value a+1),
    including the runs before the first and after the last long row."""
    alpha = composition(alpha)
    if a < 1:
        raise ValueError("short row length must be positive")
    runs = [0]
    for part in alpha:
        if part == a:
            runs[-1] += 1
        elif part == a + 1:
            runs.append(0)
        else:
            raise ValueError(f"part {part} is neither {a} nor {a + 1}")
    return tuple(runs)


def quasi_profile(alpha, a: int) -> tuple:
    """Multiplicity vector of the profile: entry j counts runs of length j.

    Trailing zeros are suppressed; the implicit zero tail is respected by
    plain tuple comparison.
    """
    runs = profile(alpha, a)
    counts = [0] * (max(runs) + 1)
    for value in runs:
        counts[value] += 1
    return tuple(counts)


def short_ends(alpha, a: int) -> int:
    """How many end rows have the short length a (a single row counts once)."""
    alpha = composition(alpha)
    if not alpha:
        raise ValueError("short ends of the empty composition are undefined")
    if any(part not in (a, a + 1) for part in alpha):
        raise ValueError(f"{alpha} is not made of parts {a} and {a + 1}")
    if len(alpha) == 1:
        return 1 if alpha[0] == a else 0
    return (alpha[0] == a) + (alpha[-1] == a)


def is_equitable(alpha):
    """(a, b) when row lengths lie in {a, a+1} and ribbon column lengths in
    {b, b+1}; None otherwise."""
    alpha = composition(alpha)
    if not alpha:
        return None
    rows = set(alpha)
    a = min(rows)
    if rows - {a, a + 1}:
        return None
    cols = set(ribbon_to_skew(alpha).column_lengths())
    b = min(cols)
    if cols - {b, b + 1}:
        return None
    return a, b
