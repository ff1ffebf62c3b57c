"""Pattern-avoiding permutations, permanents and support predicates."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

import numpy as np

from .errors import DomainError, PreconditionError
from .matrix import BinaryMatrix, PermutationPattern, _embeds, _zero_based


@dataclass(frozen=True)
class PermutationList:
    """A permutation (i_1, ..., i_n) of 1..n in one-line notation."""

    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        if sorted(vals) != list(range(1, len(vals) + 1)):
            raise DomainError(f"{vals} is not a permutation of 1..{len(vals)}")
        object.__setattr__(self, "values", vals)

    @property
    def n(self) -> int:
        return len(self.values)

    def __str__(self):
        return ",".join(str(v) for v in self.values)

    def to_matrix(self) -> BinaryMatrix:
        return BinaryMatrix(self.n, self.n, tuple(1 << (v - 1) for v in self.values))


@dataclass(frozen=True)
class AvoidingPermanentReport:
    value: int
    witness_count: int
    witnesses: Optional[list[PermutationList]] = field(default=None, compare=False)

    def to_dict(self) -> dict:
        out = {"value": self.value, "witness_count": self.witness_count}
        if self.witnesses is not None:
            out["witnesses"] = [list(w.values) for w in self.witnesses]
        return out


# sequences -----------------------------------------------------------------


def _seq_rows(seq: Sequence[int]) -> tuple[list[int], int]:
    return [1 << (v - 1) for v in seq], max(seq)


def sequence_contains(seq: Sequence[int], sigma: PermutationPattern) -> bool:
    """True iff the sequence of distinct values ``seq`` contains ``sigma``."""
    if len(seq) < sigma.k:
        return False
    rows, width = _seq_rows(seq)
    return _embeds(rows, width, _zero_based(sigma))


def _contains_ending_at_last(rows, width, vals) -> bool:
    last = len(rows) - 1
    if last + 1 < len(vals):
        return False
    col = rows[last].bit_length() - 1
    return _embeds(rows, width, vals, (len(vals) - 1, last, col))


def enumerate_avoiding(n: int, sigma: PermutationPattern) -> Iterator[PermutationList]:
    """Yield the sigma-avoiding permutations of 1..n in lexicographic order.

    A prefix is abandoned as soon as its newest entry completes an occurrence.
    """
    if n < 1:
        raise DomainError("n must be positive")
    vals = _zero_based(sigma)
    prefix: list[int] = []
    rows: list[int] = []
    used = [False] * (n + 1)

    def rec():
        if len(prefix) == n:
            yield PermutationList(tuple(prefix))
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            prefix.append(v)
            rows.append(1 << (v - 1))
            if not _contains_ending_at_last(rows, n, vals):
                used[v] = True
                yield from rec()
                used[v] = False
            prefix.pop()
            rows.pop()

    yield from rec()


def catalan(n: int) -> int:
    """C_n = binom(2n, n) / (n + 1) via C_{i+1} = C_i * 2(2i+1) / (i+2)."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    c = 1
    for i in range(n):
        c = c * 2 * (2 * i + 1) // (i + 2)
    return c


def is_grassmannian(pi) -> bool:
    """At most one descent."""
    v = _values(pi)
    return sum(a > b for a, b in zip(v, v[1:])) <= 1


def is_reverse_grassmannian(pi) -> bool:
    """At most one ascent."""
    v = _values(pi)
    return sum(a < b for a, b in zip(v, v[1:])) <= 1


def _values(pi) -> tuple[int, ...]:
    return tuple(getattr(pi, "values", pi))


# permanents ----------------------------------------------------------------


def _require_square(A: BinaryMatrix):
    if A.m != A.n:
        raise DomainError(f"need a square matrix, got {A.m}x{A.n}")


_CHUNK_BITS = 16


def permanent(A: BinaryMatrix) -> int:
    """Permanent of a square (0,1)-matrix by Ryser's inclusion-exclusion.

    per(A) = (-1)^n sum_S (-1)^|S| prod_i |row_i & S| over column subsets S.
    For a 0/1 matrix each row factor is a popcount, evaluated for blocks of
    subsets at once with numpy.  Products can reach n^n, so past n = 15 the
    accumulation falls back to Python integers.
    """
    _require_square(A)
    n = A.n
    if n > 30:
        raise DomainError("permanent is limited to n <= 30")
    rows = np.array(A.rows, dtype=np.uint64)
    total = 0
    block = 1 << min(n, _CHUNK_BITS)
    base = np.arange(block, dtype=np.uint64)
    parity = (np.bitwise_count(base) & 1).astype(np.int64)
    for hi in range(0, 1 << n, block):
        subsets = base + np.uint64(hi)
        prod = np.ones(block, dtype=object if n > 15 else np.int64)
        for r in rows:
            prod = prod * np.bitwise_count(subsets & r).astype(np.int64)
        sign = 1 - 2 * ((parity + bin(hi).count("1")) & 1)
        total += int((sign * prod).sum())
    return total if n % 2 == 0 else -total


def permanent_bruteforce(A: BinaryMatrix) -> int:
    """Count supported permutations by row-by-row backtracking."""
    _require_square(A)
    n = A.n
    rows = A.rows

    def rec(i, free):
        if i == n:
            return 1
        total = 0
        cand = rows[i] & free
        while cand:
            low = cand & -cand
            total += rec(i + 1, free ^ low)
            cand ^= low
        return total

    return rec(0, (1 << n) - 1)


def avoiding_permanent(
    A: BinaryMatrix, sigma: PermutationPattern, witnesses: bool = False
) -> AvoidingPermanentReport:
    """Number of sigma-avoiding permutations supported by ``A``.

    Backtracks over rows through the row supports, dropping a partial
    permutation once its newest entry completes an occurrence of sigma.
    """
    _require_square(A)
    n = A.n
    vals = _zero_based(sigma)
    found: list[PermutationList] = []
    picked: list[int] = []
    count = 0

    def rec(i, free):
        nonlocal count
        if i == n:
            count += 1
            if witnesses:
                found.append(PermutationList(tuple(r.bit_length() for r in picked)))
            return
        cand = A.rows[i] & free
        while cand:
            low = cand & -cand
            picked.append(low)
            if not _contains_ending_at_last(picked, n, vals):
                rec(i + 1, free ^ low)
            picked.pop()
            cand ^= low

    rec(0, (1 << n) - 1)
    return AvoidingPermanentReport(count, count, found if witnesses else None)


# matchings -----------------------------------------------------------------


def _max_matching(rows: Sequence[int], n: int, skip_row: int = -1, skip_col: int = -1):
    """Augmenting-path bipartite matching on row bitmasks.

    Returns (size, match_col) with match_col[c] the row matched to column c.
    """
    match_col = [-1] * n
    colmask = ((1 << n) - 1) & ~(1 << skip_col if skip_col >= 0 else 0)

    def augment(r, seen):
        cand = rows[r] & colmask & ~seen[0]
        while cand:
            low = cand & -cand
            c = low.bit_length() - 1
            seen[0] |= low
            if match_col[c] < 0 or augment(match_col[c], seen):
                match_col[c] = r
                return True
            cand = rows[r] & colmask & ~seen[0]
        return False

    size = 0
    for r in range(len(rows)):
        if r == skip_row:
            continue
        if augment(r, [0]):
            size += 1
    return size, match_col


def has_perfect_matching(A: BinaryMatrix) -> bool:
    _require_square(A)
    return _max_matching(A.rows, A.n)[0] == A.n


def _minor_has_matching(rows, n, match_col, i, j) -> bool:
    """Does the minor without row i and column j support a permutation?

    Reuses a perfect matching of the full matrix: dropping row i and column j
    leaves at most one unmatched row, which needs a single augmenting path.
    """
    mc = list(match_col)
    row_of_j = mc[j]
    col_of_i = mc.index(i)
    mc[j] = -1
    mc[col_of_i] = -1
    if row_of_j == i:
        return True
    colmask = ((1 << n) - 1) & ~(1 << j)

    def augment(r, seen):
        cand = rows[r] & colmask & ~seen[0]
        while cand:
            low = cand & -cand
            c = low.bit_length() - 1
            seen[0] |= low
            if mc[c] < 0 or augment(mc[c], seen):
                mc[c] = r
                return True
            cand = rows[r] & colmask & ~seen[0]
        return False

    return augment(row_of_j, [0])


def is_total_support(A: BinaryMatrix) -> bool:
    """Every one of ``A`` lies on a permutation matrix dominated by ``A``."""
    _require_square(A)
    if A.count_ones() == 0:
        raise DomainError("total support is defined for nonzero matrices")
    n = A.n
    size, mc = _max_matching(A.rows, n)
    if size < n:
        return False
    return all(_minor_has_matching(A.rows, n, mc, r - 1, c - 1) for r, c in A.ones_positions())


def is_fully_indecomposable(A: BinaryMatrix) -> bool:
    """Deleting any one row and any one column leaves a matrix with a permutation."""
    _require_square(A)
    if A.count_ones() == 0:
        raise DomainError("full indecomposability is defined for nonzero matrices")
    n = A.n
    size, mc = _max_matching(A.rows, n)
    if size < n:
        return False
    return all(_minor_has_matching(A.rows, n, mc, i, j) for i in range(n) for j in range(n))


def is_sigma_permutation_avoiding(A: BinaryMatrix, sigma: PermutationPattern) -> bool:
    """Every permutation matrix P <= A avoids ``sigma``.

    Searches for a supported permutation containing sigma: once a partial
    permutation contains it, all that is left is whether the remaining rows
    can be completed, which is a matching question.
    """
    _require_square(A)
    n = A.n
    vals = _zero_based(sigma)
    picked: list[int] = []

    def completable(i, free):
        rest = [A.rows[r] & free for r in range(i, n)]
        return _max_matching(rest, n)[0] == len(rest)

    def rec(i, free, hit):
        if hit:
            return completable(i, free)
        if i == n:
            return False
        if not completable(i, free):
            return False
        cand = A.rows[i] & free
        while cand:
            low = cand & -cand
            picked.append(low)
            now = _contains_ending_at_last(picked, n, vals)
            found = rec(i + 1, free ^ low, now)
            picked.pop()
            if found:
                return True
            cand ^= low
        return False

    return not rec(0, (1 << n) - 1, False)


# extensions ----------------------------------------------------------------


def extend_avoiding(sub: Sequence[int], n: int, sigma: PermutationPattern) -> Optional[PermutationList]:
    """Lexicographically least sigma-avoiding permutation of 1..n containing ``sub``
    as a subsequence, or None.

    Builds the permutation left to right; the next entry is either the next
    element of ``sub`` or a value missing from ``sub``, tried in increasing
    order, and prefixes that complete an occurrence are dropped.
    """
    sub = [int(v) for v in sub]
    if len(set(sub)) != len(sub) or any(not 1 <= v <= n for v in sub):
        raise DomainError(f"{sub} must be distinct values in 1..{n}")
    if sequence_contains(sub, sigma):
        raise PreconditionError(f"{sub} already contains {sigma.word()}")
    vals = _zero_based(sigma)
    in_sub = set(sub)
    prefix: list[int] = []
    rows: list[int] = []
    used = [False] * (n + 1)

    def rec(ptr):
        if len(prefix) == n:
            return True
        nxt = sub[ptr] if ptr < len(sub) else None
        for v in range(1, n + 1):
            if used[v] or (v in in_sub and v != nxt):
                continue
            prefix.append(v)
            rows.append(1 << (v - 1))
            if not _contains_ending_at_last(rows, n, vals):
                used[v] = True
                if rec(ptr + 1 if v == nxt else ptr):
                    return True
                used[v] = False
            prefix.pop()
            rows.pop()
        return False

    if rec(0):
        return PermutationList(tuple(prefix))
    return None


def is_subsequence(sub: Sequence[int], seq: Sequence[int]) -> bool:
    it = iter(seq)
    return all(v in it for v in sub)
