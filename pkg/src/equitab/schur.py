"""Expansions of ribbon Schur functions in the Schur and complete
homogeneous bases, and the conversions tying them together."""

from __future__ import annotations

import math
from collections import Counter

from .coarsen import coarsenings
from .compositions import composition, conjugate, reverse
from .errors import ResourceLimitError
from .skew import SkewShape, ribbon_to_skew
from .tableaux import CELL_LIMIT, lr_expand
from .vectors import HVector, SchurVector

JT_ROW_LIMIT = 8
H_LENGTH_LIMIT = 24
SYT_CELL_LIMIT = 20

_memo_enabled = True
_ribbon_memo: dict = {}


def set_expansion_memo(enabled: bool) -> None:
    """Enable or disable the in-process ribbon expansion memo."""
    global _memo_enabled
    _memo_enabled = bool(enabled)


def clear_expansion_memo() -> None:
    _ribbon_memo.clear()


def canonical_ribbon(alpha) -> tuple:
    """Lexicographically smaller of a composition and its reversal; ribbons
    that are reversals of each other have equal Schur expansions."""
    alpha = tuple(alpha)
    return min(alpha, alpha[::-1])


def seed_expansion_memo(items) -> None:
    """Install precomputed (composition, SchurVector) pairs in the memo."""
    for alpha, vec in items:
        _ribbon_memo[canonical_ribbon(alpha)] = SchurVector(vec)


def ribbon_schur(alpha, max_cells: int = CELL_LIMIT) -> SchurVector:
    """Schur expansion of the ribbon Schur function of alpha."""
    alpha = composition(alpha)
    if not alpha:
        return SchurVector({(): 1})
    key = canonical_ribbon(alpha)
    if _memo_enabled and key in _ribbon_memo:
        return SchurVector(_ribbon_memo[key])
    vec = lr_expand(ribbon_to_skew(key), max_cells=max_cells)
    if _memo_enabled:
        _ribbon_memo[key] = SchurVector(vec)
    return vec


def h_expand_ribbon(alpha) -> HVector:
    """Signed complete homogeneous expansion of the ribbon Schur function:
    each sorted coarsening contributes its multiplicity with sign
    (-1)^(len(alpha) - len(coarsening))."""
    alpha = composition(alpha)
    if len(alpha) > H_LENGTH_LIMIT:
        raise ResourceLimitError(f"composition length {len(alpha)} exceeds {H_LENGTH_LIMIT}")
    sign = -1 if len(alpha) % 2 else 1
    out = HVector()
    for lam, mult in coarsenings(alpha).items():
        out.add(lam, sign * (-1 if len(lam) % 2 else 1) * mult)
    return out


def jt_h_expansion(shape: SkewShape, max_rows: int = JT_ROW_LIMIT) -> HVector:
    """Signed permutation expansion of the Jacobi-Trudi determinant of the
    shape, with h_0 = 1 and negative subscripts killing a term."""
    lam = shape.outer
    mu = shape.inner_padded()
    n = len(lam)
    if n > max_rows:
        raise ResourceLimitError(f"shape has {n} rows, guard is {max_rows}")
    out = HVector()
    if n == 0:
        out.add((), 1)
        return out

    def expand(i, remaining, sign, parts):
        if i == n:
            out.add(tuple(sorted(parts, reverse=True)), sign)
            return
        for t, j in enumerate(remaining):
            sub = lam[i] - mu[j] - i + j
            if sub < 0:
                continue
            expand(
                i + 1,
                remaining[:t] + remaining[t + 1:],
                -sign if t % 2 else sign,
                parts + [sub] if sub > 0 else parts,
            )

    expand(0, tuple(range(n)), 1, [])
    return out


_h_product_memo: dict = {}


def _add_horizontal_strips(mu, k):
    """Partitions obtained from mu by adding a horizontal strip of k cells."""
    n = len(mu)
    if n == 0:
        yield (k,) if k else ()
        return

    def grow(i, remaining, acc):
        if i == n:
            if remaining == 0:
                yield tuple(acc)
            elif remaining <= mu[-1]:
                yield tuple(acc + [remaining])
            return
        top = remaining if i == 0 else min(remaining, mu[i - 1] - mu[i])
        for extra in range(top + 1):
            acc.append(mu[i] + extra)
            yield from grow(i + 1, remaining - extra, acc)
            acc.pop()

    yield from grow(0, k, [])


def _schur_of_h_product(lam) -> Counter:
    """Schur expansion of the product of complete homogeneous generators
    indexed by lam, by iterated horizontal-strip growth."""
    if lam in _h_product_memo:
        return _h_product_memo[lam]
    vec = Counter({(): 1})
    for part in lam:
        grown = Counter()
        for mu, coeff in vec.items():
            for nu in _add_horizontal_strips(mu, part):
                grown[nu] += coeff
        vec = grown
    _h_product_memo[lam] = vec
    return vec


def h_to_s(hvec, max_cells: int = CELL_LIMIT) -> SchurVector:
    """Convert a complete homogeneous expansion to the Schur basis.  The
    transition is unitriangular: h indexed by lam contributes s at lam with
    coefficient 1 plus lexicographically larger terms."""
    out = SchurVector()
    for lam, coeff in hvec.items():
        if sum(lam) > max_cells:
            raise ResourceLimitError(f"term {lam} exceeds the {max_cells}-cell guard")
        for nu, mult in _schur_of_h_product(lam).items():
            out.add(nu, coeff * mult)
    return out


def product_expand(alpha, beta, max_cells: int = CELL_LIMIT) -> SchurVector:
    """Schur expansion of the product of two ribbon Schur functions, via the
    LR expansion of the disconnected shape stacking beta below-left of alpha."""
    alpha = composition(alpha)
    beta = composition(beta)
    if not alpha:
        return ribbon_schur(beta, max_cells=max_cells)
    if not beta:
        return ribbon_schur(alpha, max_cells=max_cells)
    sa = ribbon_to_skew(alpha)
    sb = ribbon_to_skew(beta)
    width = sb.outer[0]
    outer = tuple(x + width for x in sa.outer) + sb.outer
    inner = tuple(x + width for x in sa.inner_padded()) + sb.inner
    return lr_expand(SkewShape(outer, inner), max_cells=max_cells)


def hook_length_count(nu) -> int:
    """Standard Young tableaux of the straight shape nu, by hook lengths."""
    total = sum(nu)
    conj = conjugate(nu)
    denom = 1
    for i, row in enumerate(nu):
        for j in range(row):
            denom *= row - j + conj[j] - i - 1
    return math.factorial(total) // denom


def syt_count(alpha) -> int:
    """Standard fillings of the ribbon alpha: Schur coefficients weighted by
    hook length counts."""
    alpha = composition(alpha)
    if sum(alpha) > SYT_CELL_LIMIT:
        raise ResourceLimitError(f"size {sum(alpha)} exceeds {SYT_CELL_LIMIT}")
    return sum(coeff * hook_length_count(nu) for nu, coeff in ribbon_schur(alpha).items())


def syt_count_by_descents(alpha) -> int:
    """Independent count of the same quantity: signed multinomial sum over
    coarsenings (inclusion-exclusion on descent sets)."""
    alpha = composition(alpha)
    total = math.factorial(sum(alpha))
    acc = 0
    for lam, mult in coarsenings(alpha).items():
        term = total
        for part in lam:
            term //= math.factorial(part)
        acc += (-1) ** (len(alpha) - len(lam)) * mult * term
    return acc


def schur_difference(alpha, beta, max_cells: int = CELL_LIMIT) -> SchurVector:
    """ribbon_schur(alpha) - ribbon_schur(beta)."""
    return ribbon_schur(alpha, max_cells) - ribbon_schur(beta, max_cells)
