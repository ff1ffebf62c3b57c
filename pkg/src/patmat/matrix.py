"""(0,1)-matrices, permutation patterns and pattern containment.

Rows are stored as Python ints used as bit vectors: bit ``j`` of ``rows[i]``
is the entry in row ``i``, column ``j`` (both 0-based).  Everything that
crosses the library boundary as a :class:`Position` is 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import MatrixFormatError


class Position(NamedTuple):
    """A 1-based (row, col) cell."""

    row: int
    col: int

    def __str__(self):
        return f"{self.row},{self.col}"


def _bits(x: int):
    """Yield the set bit indices of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _band(lo: int, hi: int) -> int:
    """Mask with bits lo..hi inclusive set (empty when lo > hi)."""
    if lo > hi:
        return 0
    return ((1 << (hi + 1)) - 1) ^ ((1 << lo) - 1)


@dataclass(frozen=True)
class BinaryMatrix:
    """Immutable dense m x n (0,1)-matrix with bit-vector rows."""

    m: int
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"matrix dimensions must be positive, got {self.m}x{self.n}")
        rows = tuple(int(r) for r in self.rows)
        if len(rows) != self.m:
            raise ValueError(f"expected {self.m} rows, got {len(rows)}")
        full = (1 << self.n) - 1
        for r in rows:
            if r < 0 or r & ~full:
                raise ValueError(f"row bit vector {r} does not fit in {self.n} columns")
        object.__setattr__(self, "rows", rows)

    # construction -----------------------------------------------------

    @classmethod
    def zeros(cls, m: int, n: int) -> "BinaryMatrix":
        return cls(m, n, (0,) * m)

    @classmethod
    def ones(cls, m: int, n: int) -> "BinaryMatrix":
        return cls(m, n, ((1 << n) - 1,) * m)

    @classmethod
    def identity(cls, k: int) -> "BinaryMatrix":
        return cls(k, k, tuple(1 << i for i in range(k)))

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[int]]) -> "BinaryMatrix":
        """Build from a nested sequence of 0/1 values (row-major)."""
        if not data or not data[0]:
            raise ValueError("matrix must have at least one row and one column")
        n = len(data[0])
        rows = []
        for i, row in enumerate(data):
            if len(row) != n:
                raise ValueError(f"row {i + 1} has {len(row)} entries, expected {n}")
            mask = 0
            for j, v in enumerate(row):
                if v not in (0, 1):
                    raise ValueError(f"entry ({i + 1},{j + 1}) is {v!r}, not 0/1")
                if v:
                    mask |= 1 << j
            rows.append(mask)
        return cls(len(data), n, tuple(rows))

    @classmethod
    def from_array(cls, arr) -> "BinaryMatrix":
        arr = np.asarray(arr)
        if arr.ndim != 2:
            raise ValueError("expected a 2-d array")
        return cls.from_rows(arr.astype(int).tolist())

    @classmethod
    def from_positions(cls, m: int, n: int, cells: Iterable[tuple[int, int]]) -> "BinaryMatrix":
        """Matrix with ones exactly at the given 1-based cells."""
        rows = [0] * m
        for r, c in cells:
            if not (1 <= r <= m and 1 <= c <= n):
                raise ValueError(f"cell ({r},{c}) outside a {m}x{n} matrix")
            rows[r - 1] |= 1 << (c - 1)
        return cls(m, n, tuple(rows))

    # access -----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.m, self.n)

    def __getitem__(self, idx) -> int:
        i, j = idx
        if not (0 <= i < self.m and 0 <= j < self.n):
            raise IndexError(f"index ({i},{j}) out of range for {self.m}x{self.n}")
        return (self.rows[i] >> j) & 1

    def entry(self, pos: Position) -> int:
        """Entry at a 1-based position."""
        return self[pos[0] - 1, pos[1] - 1]

    def count_ones(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def ones_positions(self) -> list[Position]:
        return [Position(i + 1, j + 1) for i, r in enumerate(self.rows) for j in _bits(r)]

    def zero_positions(self) -> list[Position]:
        full = (1 << self.n) - 1
        return [Position(i + 1, j + 1) for i, r in enumerate(self.rows) for j in _bits(full & ~r)]

    def to_array(self) -> np.ndarray:
        out = np.zeros((self.m, self.n), dtype=np.int8)
        for i, r in enumerate(self.rows):
            for j in _bits(r):
                out[i, j] = 1
        return out

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.n)] for r in self.rows]

    # derived matrices -------------------------------------------------

    def with_entry(self, pos: Position, value: int) -> "BinaryMatrix":
        i, j = pos[0] - 1, pos[1] - 1
        rows = list(self.rows)
        if value:
            rows[i] |= 1 << j
        else:
            rows[i] &= ~(1 << j)
        return BinaryMatrix(self.m, self.n, tuple(rows))

    def with_ones(self, cells: Iterable[tuple[int, int]]) -> "BinaryMatrix":
        rows = list(self.rows)
        for r, c in cells:
            rows[r - 1] |= 1 << (c - 1)
        return BinaryMatrix(self.m, self.n, tuple(rows))

    def reverse_columns(self) -> "BinaryMatrix":
        return BinaryMatrix(self.m, self.n, tuple(_reverse_bits(r, self.n) for r in self.rows))

    def reverse_rows(self) -> "BinaryMatrix":
        return BinaryMatrix(self.m, self.n, self.rows[::-1])

    def transpose(self) -> "BinaryMatrix":
        cols = [0] * self.n
        for i, r in enumerate(self.rows):
            for j in _bits(r):
                cols[j] |= 1 << i
        return BinaryMatrix(self.n, self.m, tuple(cols))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "BinaryMatrix":
        """Submatrix on 1-based row and column index lists (kept in the given order)."""
        out = []
        for r in rows:
            src = self.rows[r - 1]
            mask = 0
            for t, c in enumerate(cols):
                if (src >> (c - 1)) & 1:
                    mask |= 1 << t
            out.append(mask)
        return BinaryMatrix(len(rows), len(cols), tuple(out))

    def dominated_by(self, other: "BinaryMatrix") -> bool:
        """Entrywise ``self <= other``."""
        if self.shape != other.shape:
            return False
        return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    def __or__(self, other: "BinaryMatrix") -> "BinaryMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return BinaryMatrix(self.m, self.n, tuple(a | b for a, b in zip(self.rows, other.rows)))

    def render(self) -> str:
        return "\n".join("".join("1" if (r >> j) & 1 else "0" for j in range(self.n)) for r in self.rows)

    def __str__(self):
        return self.render()


def _reverse_bits(x: int, width: int) -> int:
    out = 0
    for j in _bits(x):
        out |= 1 << (width - 1 - j)
    return out


def parse_matrix(text: str) -> BinaryMatrix:
    """Parse the text matrix format: one row per line of '0'/'1' characters.

    Spaces and tabs inside a line are ignored.  Leading and trailing blank
    lines are dropped; a blank line between rows is a ragged row.
    """
    lines = text.replace("\r\n", "\n").split("\n")
    while lines and not lines[-1].strip():
        lines.pop()
    start = 0
    while start < len(lines) and not lines[start].strip():
        start += 1
    if start == len(lines):
        raise MatrixFormatError("empty matrix text")
    data = []
    width = None
    for lineno in range(start, len(lines)):
        line = lines[lineno]
        for col, ch in enumerate(line, start=1):
            if ch not in "01 \t":
                raise MatrixFormatError(
                    f"illegal character {ch!r} at line {lineno + 1}, column {col}"
                )
        bits = [int(ch) for ch in line if ch in "01"]
        if width is None:
            width = len(bits)
        if len(bits) != width or not bits:
            raise MatrixFormatError(
                f"line {lineno + 1} has {len(bits)} entries, expected {width}"
            )
        data.append(bits)
    return BinaryMatrix.from_rows(data)


def render_matrix(A: BinaryMatrix) -> str:
    return A.render()


@dataclass(frozen=True)
class PermutationPattern:
    """A permutation (p_1, ..., p_k) of 1..k used as a forbidden pattern."""

    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        if not vals:
            raise ValueError("a pattern needs at least one entry")
        if sorted(vals) != list(range(1, len(vals) + 1)):
            raise ValueError(f"{vals} is not a permutation of 1..{len(vals)}")
        object.__setattr__(self, "values", vals)

    @property
    def k(self) -> int:
        return len(self.values)

    @classmethod
    def identity(cls, k: int) -> "PermutationPattern":
        return cls(tuple(range(1, k + 1)))

    @classmethod
    def from_word(cls, word: str) -> "PermutationPattern":
        """Parse compact notation: "312", "1234", or comma separated for k >= 10."""
        w = word.strip()
        try:
            if "," in w:
                vals = tuple(int(t) for t in w.split(","))
            else:
                if not w.isdigit():
                    raise ValueError
                vals = tuple(int(ch) for ch in w)
            return cls(vals)
        except ValueError:
            raise MatrixFormatError(f"not a permutation word: {word!r}") from None

    def word(self) -> str:
        if self.k <= 9:
            return "".join(str(v) for v in self.values)
        return ",".join(str(v) for v in self.values)

    def reverse(self) -> "PermutationPattern":
        return PermutationPattern(self.values[::-1])

    def complement(self) -> "PermutationPattern":
        return PermutationPattern(tuple(self.k + 1 - v for v in self.values))

    def inverse(self) -> "PermutationPattern":
        inv = [0] * self.k
        for i, v in enumerate(self.values, start=1):
            inv[v - 1] = i
        return PermutationPattern(tuple(inv))

    def is_identity(self) -> bool:
        return self.values == tuple(range(1, self.k + 1))

    def __str__(self):
        return self.word()


def pattern_to_matrix(sigma: PermutationPattern) -> BinaryMatrix:
    """k x k permutation matrix with a 1 at (i, p_i)."""
    return BinaryMatrix(sigma.k, sigma.k, tuple(1 << (p - 1) for p in sigma.values))


# containment ---------------------------------------------------------------


def _embeds(rows: Sequence[int], n: int, vals: Sequence[int], anchor=None) -> bool:
    """Backtracking search for the pattern ``vals`` (0-based values) in ``rows``.

    Pattern rows are matched in order to increasing matrix rows; pattern row
    ``i`` lands in column ``col(vals[i])`` and columns must be ordered like the
    values.  Candidate columns are restricted to the band left free by the
    nearest already-placed smaller and larger values, leaving room for the
    values in between.  ``anchor=(a, ra, ca)`` forces pattern row ``a`` onto
    matrix cell (ra, ca).
    """
    k = len(vals)
    m = len(rows)
    if k > m or k > n:
        return False
    cols = [-1] * k
    a = ra = -1
    if anchor is not None:
        a, ra, ca = anchor
        if not (rows[ra] >> ca) & 1:
            return False
        if ra < a or m - 1 - ra < k - 1 - a:
            return False
        if ca < vals[a] or n - 1 - ca < k - 1 - vals[a]:
            return False
        cols[a] = ca

    # nearest placed neighbours (by value) at the moment row i is assigned
    lower = [-1] * k
    upper = [-1] * k
    for i in range(k):
        if i == a:
            continue
        best_lo = best_hi = -1
        for j in list(range(i)) + ([a] if a > i else []):
            if vals[j] < vals[i] and (best_lo < 0 or vals[j] > vals[best_lo]):
                best_lo = j
            if vals[j] > vals[i] and (best_hi < 0 or vals[j] < vals[best_hi]):
                best_hi = j
        lower[i] = best_lo
        upper[i] = best_hi

    def rec(i: int, r0: int) -> bool:
        if i == k:
            return True
        if i == a:
            return rec(i + 1, ra + 1)
        lo = lower[i]
        hi = upper[i]
        v = vals[i]
        lo_col = cols[lo] + (v - vals[lo]) if lo >= 0 else v
        hi_col = cols[hi] - (vals[hi] - v) if hi >= 0 else n - k + v
        band = _band(lo_col, hi_col)
        if not band:
            return False
        rmax = ra - (a - i) if i < a else m - (k - i)
        for r in range(r0, rmax + 1):
            cand = rows[r] & band
            while cand:
                low = cand & -cand
                cols[i] = low.bit_length() - 1
                if rec(i + 1, r + 1):
                    return True
                cand ^= low
        return False

    return rec(0, 0)


def _zero_based(sigma: PermutationPattern) -> tuple[int, ...]:
    return tuple(v - 1 for v in sigma.values)


def contains_pattern(A: BinaryMatrix, sigma: PermutationPattern) -> bool:
    """True iff some k x k submatrix of ``A`` dominates the matrix of ``sigma``."""
    return _embeds(A.rows, A.n, _zero_based(sigma))


def contains_pattern_through(A: BinaryMatrix, sigma: PermutationPattern, pos: Position) -> bool:
    """True iff some occurrence of ``sigma`` in ``A`` uses the (1-based) cell ``pos``."""
    vals = _zero_based(sigma)
    r, c = pos[0] - 1, pos[1] - 1
    return any(_embeds(A.rows, A.n, vals, (a, r, c)) for a in range(len(vals)))


def _rows_contain_through(rows, n, vals, r, c) -> bool:
    return any(_embeds(rows, n, vals, (a, r, c)) for a in range(len(vals)))


def _rows_contain_ending_last_row(rows, n, vals) -> bool:
    """Occurrence whose last pattern row sits on the last matrix row."""
    k = len(vals)
    last = len(rows) - 1
    return any(_embeds(rows, n, vals, (k - 1, last, c)) for c in _bits(rows[last]))


def longest_increasing_chain(A: BinaryMatrix) -> int:
    """Length of the longest chain of ones strictly increasing in row and column."""
    n = A.n
    best = [0] * n
    for r in A.rows:
        if not r:
            continue
        new = best[:]
        run = 0
        for c in range(n):
            if (r >> c) & 1 and run + 1 > new[c]:
                new[c] = run + 1
            if best[c] > run:
                run = best[c]
        best = new
    return max(best)


def contains_312(A: BinaryMatrix) -> bool:
    """Specialised test for the pattern 312.

    For each row holding the '3' only its rightmost one matters; for each later
    row holding the '1' only its leftmost one matters; the '2' must then sit in
    a strictly later row in a column strictly between them, which is a single
    AND against the OR of all later rows.
    """
    rows = A.rows
    m = len(rows)
    below = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        below[i] = below[i + 1] | rows[i]
    for i in range(m - 2):
        if not rows[i]:
            continue
        j = rows[i].bit_length() - 1
        for i2 in range(i + 1, m - 1):
            r2 = rows[i2]
            if not r2:
                continue
            c1 = (r2 & -r2).bit_length() - 1
            if c1 >= j - 1:
                continue
            if below[i2 + 1] & _band(c1 + 1, j - 1):
                return True
    return False




def _avoid_checker(sigma: PermutationPattern):
    """Fast full-matrix containment test specialised where possible."""
    if sigma.is_identity():
        k = sigma.k
        return lambda A: longest_increasing_chain(A) >= k
    if sigma.values == (3, 1, 2):
        return contains_312
    return lambda A: contains_pattern(A, sigma)
