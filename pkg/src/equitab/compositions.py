"""Compositions, partitions, and the elementary operations on them.

A composition is a tuple of positive integers; read as a ribbon it lists
row lengths from top to bottom.  A partition is a weakly decreasing
composition.  Everything here is a pure function on plain tuples.
"""

from __future__ import annotations

import math

Composition = tuple
Partition = tuple


def composition(parts) -> Composition:
    """Normalize an iterable of positive integers to a composition tuple."""
    alpha = tuple(int(p) for p in parts)
    if any(p < 1 for p in alpha):
        raise ValueError(f"composition parts must be positive integers, got {alpha}")
    return alpha


def partition(parts) -> Partition:
    """Normalize and validate a weakly decreasing tuple of positive integers."""
    lam = composition(parts)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"partition parts must weakly decrease, got {lam}")
    return lam


def sort_to_partition(alpha) -> Partition:
    """The partition obtained by sorting the parts of a composition."""
    return tuple(sorted(alpha, reverse=True))


def conjugate(lam) -> Partition:
    """Transpose of a partition diagram: column lengths of the row diagram."""
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part >= j) for j in range(1, lam[0] + 1))


def reverse(alpha) -> Composition:
    return alpha[::-1]


def concat(alpha, beta) -> Composition:
    return tuple(alpha) + tuple(beta)


def near_concat(alpha, beta) -> Composition:
    """Join two compositions, merging the last part of the first with the
    first part of the second.  Both operands must be nonempty."""
    if not alpha or not beta:
        raise ValueError("near-concatenation requires nonempty operands")
    return tuple(alpha[:-1]) + (alpha[-1] + beta[0],) + tuple(beta[1:])


def compose(alpha, beta) -> Composition:
    """Composition of compositions: substitute near-concatenated runs of beta
    for each part of alpha, concatenating the runs.  The result has size
    |alpha| * |beta|."""
    if not alpha or not beta:
        raise ValueError("composition of compositions requires nonempty operands")
    out = ()
    for a in alpha:
        block = tuple(beta)
        for _ in range(a - 1):
            block = near_concat(block, beta)
        out += block
    return out


def lex_compare(lam, mu) -> int:
    """-1, 0 or 1 comparing partitions lexicographically with zero padding."""
    n = max(len(lam), len(mu))
    a = tuple(lam) + (0,) * (n - len(lam))
    b = tuple(mu) + (0,) * (n - len(mu))
    return (a > b) - (a < b)


def move_cell(alpha, i) -> Composition:
    """Take one cell off the first part and add it to part i (1-based).

    Requires alpha[0] >= 2 and 2 <= i <= len(alpha).
    """
    if not 2 <= i <= len(alpha):
        raise ValueError(f"row index {i} out of range for length {len(alpha)}")
    if alpha[0] < 2:
        raise ValueError("first part must be at least 2 to move a cell")
    out = list(alpha)
    out[0] -= 1
    out[i - 1] += 1
    return tuple(out)


def choose(x: int, k: int) -> int:
    """Binomial coefficient clamped to 0 whenever x is negative."""
    return math.comb(x, k) if x >= 0 else 0


def choose_poly(x: int, k: int) -> int:
    """The degree-k binomial polynomial x(x-1)...(x-k+1)/k! at any integer x."""
    if x >= 0:
        return math.comb(x, k)
    return (-1) ** k * math.comb(k - x - 1, k)


def count_disjoint_pairs(x: int, k: int) -> int:
    """Number of ways to choose k disjoint adjacent pairs from a row of x items."""
    return choose(x - k, k)


def jensen_check(x: int, y: int, v: int) -> bool:
    """Test the Jensen convolution identity for binomial polynomials at (x, y, v)."""
    lhs = sum(choose_poly(x - u, u) * choose_poly(y - (v - u), v - u) for u in range(v + 1))
    rhs = sum(choose_poly(x + y - v - u, v - u) * (-1) ** u for u in range(v + 1))
    return lhs == rhs
