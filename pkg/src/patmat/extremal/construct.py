"""Constructions of maximal pattern-avoiding matrices and greedy saturation."""

from __future__ import annotations

import random
from typing import Iterable, Optional

from ..errors import DomainError, PreconditionError
from ..matrix import (
    BinaryMatrix,
    PermutationPattern,
    _rows_contain_through,
    _zero_based,
    contains_pattern,
)
from .bounds import max_ones_identity_avoiding
from .zigzag import LR, RL, ZigzagPath, path_from_moves


def _default_band_path(m: int, n: int, k: int) -> ZigzagPath:
    # k-2 leading horizontal and trailing vertical steps; the rest interleaved evenly
    lead = k - 2
    h = n - 1 - lead
    d = m - 1 - lead
    middle = []
    hi = di = 0
    while hi < h or di < d:
        # emit whichever move lags behind its share of the walk
        if di >= d or (hi < h and (hi + 1) * (d + 1) <= (di + 1) * (h + 1)):
            middle.append("H")
            hi += 1
        else:
            middle.append("D")
            di += 1
    return path_from_moves((1, n), "H" * lead + "".join(middle) + "D" * lead, RL)


def construct_canonical_identity_avoiding(
    m: int, n: int, k: int, base_path: Optional[ZigzagPath] = None
) -> BinaryMatrix:
    """A 12...k-avoiding m x n matrix with (k-1)(m+n-(k-1)) ones.

    The ones are k-1 diagonal translates of one complete RL path: the copy
    shifted by (t, t) is clipped to rows and columns t+1.., where it is again
    a complete path.  That needs the base path to begin with k-2 horizontal
    steps and end with k-2 vertical ones.  Any increasing chain meets each
    translate at most once, so no chain has k cells.

    ``base_path`` defaults to a path whose middle interleaves the two kinds of
    step as evenly as possible.
    """
    max_ones_identity_avoiding(m, n, k)  # domain check
    path = base_path if base_path is not None else _default_band_path(m, n, k)
    if path.orientation != RL or not path.is_complete_in(m, n):
        raise DomainError("base path must be a complete RL path of the matrix")
    cells = path.cells
    if any(cells[i].row != 1 for i in range(k - 1)) or any(
        cells[-1 - i].col != 1 for i in range(k - 1)
    ):
        raise DomainError(f"base path must start with {k - 2} left steps and end with {k - 2} down steps")
    ones = set()
    for t in range(k - 1):
        for r, c in cells:
            rr, cc = r + t, c + t
            if rr <= m and cc <= n:
                ones.add((rr, cc))
    return BinaryMatrix.from_positions(m, n, ones)


def greedy_saturate(A: BinaryMatrix, sigma: PermutationPattern, choice_seed: int = 0) -> BinaryMatrix:
    """Flip zeros to ones while the matrix keeps avoiding ``sigma``.

    Zeros are visited once each, in row-major order shuffled by ``choice_seed``.
    One pass suffices: a zero that cannot be flipped now never becomes
    flippable later, since adding ones only creates occurrences.
    """
    if contains_pattern(A, sigma):
        raise PreconditionError(f"input already contains {sigma.word()}")
    candidates = A.zero_positions()
    random.Random(choice_seed).shuffle(candidates)
    rows = list(A.rows)
    vals = _zero_based(sigma)
    for r, c in candidates:
        i, j = r - 1, c - 1
        rows[i] |= 1 << j
        if _rows_contain_through(rows, A.n, vals, i, j):
            rows[i] &= ~(1 << j)
    return BinaryMatrix(A.m, A.n, tuple(rows))


def validate_maximal(A: BinaryMatrix, sigma: PermutationPattern) -> bool:
    """True iff ``A`` avoids ``sigma`` and every single 0 -> 1 flip creates it."""
    if contains_pattern(A, sigma):
        return False
    rows = list(A.rows)
    vals = _zero_based(sigma)
    for r, c in A.zero_positions():
        i, j = r - 1, c - 1
        rows[i] |= 1 << j
        creates = _rows_contain_through(rows, A.n, vals, i, j)
        rows[i] &= ~(1 << j)
        if not creates:
            return False
    return True


# 312 constructions ---------------------------------------------------------


def _check_312_path(m: int, n: int, path: ZigzagPath) -> list[tuple[int, int]]:
    if m < 2 or n < 2:
        raise DomainError("need m, n >= 2")
    if path.orientation != LR or not path.is_complete_in(m, n):
        raise DomainError("need a complete LR path from (1,1) to (m,n)")
    cells = [(p.row, p.col) for p in path.cells]
    if cells[1] != (1, 2) or cells[-2] != (m - 1, n):
        raise DomainError("path must pass through (1,2) and (m-1,n)")
    return cells


DELETE = "delete"


def construct_312_maximal(
    m: int,
    n: int,
    path: ZigzagPath,
    choice_seed: int = 0,
    choices: Optional[Iterable] = None,
) -> BinaryMatrix:
    """A maximal 312-avoiding matrix built around an LR path.

    The path runs from (1,1),(1,2) to (m-1,n),(m,n); (m,1) is also a one.
    Each subproblem is a set of rows (its last row is the "bottom") and a
    range of columns, with its own path and a one in its bottom-left cell.
    Until the subproblem is 2 x 2, one of two moves is made:

    * place a one at (bottom, q) for an interior column q, let p be the
      lowest path row in column q, and recurse on rows {first..p, bottom} x
      columns {first..q} and on rows {p..bottom} x columns {q..last};
    * when the path ends in a vertical run of at least two steps, leave the
      bottom row alone, put a one at the bottom-left of the row above, and
      recurse without the bottom row.

    Moves are drawn with ``random.Random(choice_seed)``, or taken in order from
    ``choices`` (interior columns as 1-based subproblem column numbers, or
    ``"delete"``) wherever more than one move is available.
    """
    cells = _check_312_path(m, n, path)
    ones = set(cells)
    ones.add((m, 1))
    rng = random.Random(choice_seed)
    scripted = iter(choices) if choices is not None else None

    def choose(options):
        if len(options) == 1:
            return options[0]
        if scripted is None:
            return rng.choice(options)
        try:
            pick = next(scripted)
        except StopIteration:
            raise DomainError("ran out of scripted choices") from None
        if pick not in options:
            raise DomainError(f"choice {pick!r} not among {options}")
        return pick

    # explicit stack keeps the left-then-right order of the recursion
    stack = [(list(range(1, m + 1)), list(range(1, n + 1)), [(r - 1, c - 1) for r, c in cells])]
    while stack:
        R, C, local = stack.pop()
        mm, nn = len(R), len(C)
        on_path = set(local)
        options = list(range(2, nn)) if nn >= 3 else []
        if mm >= 3 and (mm - 3, nn - 1) in on_path:
            options.append(DELETE)
        if not options:
            continue
        move = choose(options)
        if move == DELETE:
            ones.add((R[-2], C[0]))
            stack.append((R[:-1], C, local[:-1]))
            continue
        q = move - 1
        ones.add((R[-1], C[q]))
        p = max(i for i, j in local if j == q)
        cut = local.index((p, q))
        left = (R[: p + 1] + [R[-1]], C[: q + 1], local[: cut + 1] + [(p + 1, q)])
        right = (R[p:], C[q:], [(i - p, j - q) for i, j in local[cut:]])
        stack.append(right)
        stack.append(left)
    return BinaryMatrix.from_positions(m, n, ones)


def construct_312_shadow(m: int, n: int, path: ZigzagPath) -> BinaryMatrix:
    """Deterministic maximal 312-avoiding matrix from an LR path.

    Adds the vertical shadow of the path (the cell just left of every cell the
    path enters by a down step) and then fills the bottom row.
    """
    cells = _check_312_path(m, n, path)
    ones = set(cells)
    for (r0, c0), (r1, c1) in zip(cells, cells[1:]):
        if r1 == r0 + 1:
            ones.add((r1, c1 - 1))
    ones.update((m, c) for c in range(1, n + 1))
    return BinaryMatrix.from_positions(m, n, ones)


def decompose_Jn(n: int) -> list[PermutationPattern]:
    """n permutations, each two decreasing runs, whose matrices sum to J_n.

    The t-th one is (n-t, ..., 1, n, ..., n-t+1).
    """
    if n < 1:
        raise DomainError("n must be positive")
    out = []
    for t in range(n):
        head = tuple(range(n - t, 0, -1))
        tail = tuple(range(n, n - t, -1))
        out.append(PermutationPattern(head + tail))
    return out
