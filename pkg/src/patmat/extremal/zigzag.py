"""Zigzag paths: recognition, peeling decompositions, crucial and corner cells.

Orientation is named by endpoints.  An "RL" path runs from the top-right
corner towards the bottom-left, each step going one column left or one row
down.  An "LR" path runs from the top-left corner towards the bottom-right,
each step going one column right or one row down.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..errors import DomainError, MatrixFormatError, StructuralError
from ..matrix import BinaryMatrix, Position, longest_increasing_chain
from .bounds import max_ones_identity_avoiding

RL = "RL"
LR = "LR"


@dataclass(frozen=True)
class ZigzagPath:
    cells: tuple[Position, ...]
    orientation: str = RL
    complete: bool = False

    def __post_init__(self):
        if self.orientation not in (RL, LR):
            raise DomainError(f"orientation must be 'RL' or 'LR', got {self.orientation!r}")
        cells = tuple(Position(int(r), int(c)) for r, c in self.cells)
        if not cells:
            raise DomainError("a zigzag path needs at least one cell")
        side = -1 if self.orientation == RL else 1
        for a, b in zip(cells, cells[1:]):
            step = (b.row - a.row, b.col - a.col)
            if step not in ((0, side), (1, 0)):
                raise DomainError(f"{a} -> {b} is not a single {self.orientation} zigzag step")
        object.__setattr__(self, "cells", cells)

    def __len__(self):
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)

    @property
    def start(self) -> Position:
        return self.cells[0]

    @property
    def end(self) -> Position:
        return self.cells[-1]

    def is_complete_in(self, m: int, n: int) -> bool:
        if self.orientation == RL:
            return self.start == (1, n) and self.end == (m, 1)
        return self.start == (1, 1) and self.end == (m, n)

    def to_matrix(self, m: int, n: int) -> BinaryMatrix:
        return BinaryMatrix.from_positions(m, n, self.cells)

    def render(self) -> str:
        return "\n".join([self.orientation] + [f"{r},{c}" for r, c in self.cells])


def parse_path(text: str) -> ZigzagPath:
    """Parse the path format: an "RL"/"LR" header then one "r,c" pair per line."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise MatrixFormatError("empty path text")
    orientation = lines[0].upper()
    if orientation not in (RL, LR):
        raise MatrixFormatError(f"path header must be RL or LR, got {lines[0]!r}")
    cells = []
    for lineno, ln in enumerate(lines[1:], start=2):
        try:
            r, c = (int(t) for t in ln.split(","))
        except ValueError:
            raise MatrixFormatError(f"line {lineno}: expected 'row,col', got {ln!r}") from None
        cells.append((r, c))
    try:
        path = ZigzagPath(tuple(cells), orientation)
    except DomainError as exc:
        raise MatrixFormatError(str(exc)) from None
    if orientation == RL:
        complete = path.start.row == 1 and path.end.col == 1
    else:
        complete = path.start == (1, 1)
    return ZigzagPath(path.cells, orientation, complete)


def recognize_zigzag(A: BinaryMatrix):
    """The complete RL zigzag path formed by the ones of ``A``, or None.

    Checks the defining conditions directly: m+n-1 ones, ones at the top-right
    and bottom-left corners, and every other one has a one immediately to its
    left or immediately below it but not both.
    """
    m, n = A.shape
    if A.count_ones() != m + n - 1:
        return None
    if not (A[0, n - 1] and A[m - 1, 0]):
        return None
    for r, c in A.ones_positions():
        if (r, c) == (m, 1):
            continue
        left = c > 1 and A[r - 1, c - 2]
        below = r < m and A[r, c - 1]
        if bool(left) == bool(below):
            return None
    cells = [Position(1, n)]
    r, c = 1, n
    while (r, c) != (m, 1):
        if c > 1 and A[r - 1, c - 2]:
            c -= 1
        else:
            r += 1
        cells.append(Position(r, c))
    return ZigzagPath(tuple(cells), RL, True)


@dataclass(frozen=True)
class FerrersShape:
    """Row lengths of a Ferrers array of zeros, anchored at its top-left corner.

    Used for the (m-1) x (n-1) zero block of the trivial 12-avoiding matrix:
    entry i is the length of block row i (matrix row i+2), nonincreasing.
    """

    row_lengths: tuple[int, ...]

    def __post_init__(self):
        rl = tuple(int(x) for x in self.row_lengths)
        object.__setattr__(self, "row_lengths", rl)
        if any(x < 0 for x in rl) or any(a < b for a, b in zip(rl, rl[1:])):
            raise DomainError(f"Ferrers row lengths must be nonincreasing and >= 0: {rl}")


def zigzag_from_ferrers(m: int, n: int, shape: FerrersShape) -> BinaryMatrix:
    """Start from the trivial 12-avoiding matrix (first row and column all ones),
    split its zero block into ``shape`` and the complement, and shift the
    Ferrers part one cell to the northwest.  The ones left over form a
    complete RL zigzag path.
    """
    f = shape.row_lengths
    if len(f) != m - 1 or any(x > n - 1 for x in f):
        raise DomainError(f"shape {f} does not fit the ({m - 1}) x ({n - 1}) zero block")
    if m == 1:
        return BinaryMatrix.ones(1, n)
    cells = [(1, c) for c in range(f[0] + 1, n + 1)]
    for i in range(2, m):
        cells += [(i, c) for c in range(f[i - 1] + 1, f[i - 2] + 2)]
    cells += [(m, c) for c in range(1, f[m - 2] + 2)]
    return BinaryMatrix.from_positions(m, n, cells)


def ferrers_of_zigzag(path: ZigzagPath, m: int, n: int) -> FerrersShape:
    """Inverse of :func:`zigzag_from_ferrers` for a complete RL path."""
    if path.orientation != RL or not path.is_complete_in(m, n):
        raise DomainError("need a complete RL path")
    leftmost = {}
    for r, c in path.cells:
        leftmost[r] = min(c, leftmost.get(r, c))
    return FerrersShape(tuple(leftmost[i] - 1 for i in range(1, m)))


def peel_zigzag_decomposition(A: BinaryMatrix, k: int) -> list[ZigzagPath]:
    """Split a 12...k-avoiding matrix with the maximum number of ones into k-1 RL paths.

    Path j starts at the top-right cell of the residual submatrix (rows and
    columns j..).  In each row it takes the run of ones extending left from
    where it entered the row, then steps down one row from the leftmost cell
    of that run.  The path must finish in the first column of the residual;
    its cells are removed and the residual shrinks by one row and one column.
    """
    m, n = A.shape
    target = max_ones_identity_avoiding(m, n, k)
    if A.count_ones() != target:
        raise DomainError(f"matrix has {A.count_ones()} ones, expected {target}")
    if longest_increasing_chain(A) >= k:
        raise DomainError(f"matrix contains the pattern 1..{k}")
    rows = list(A.rows)
    paths = []
    for t in range(k - 1):
        r, c = t, n - 1
        if not (rows[r] >> c) & 1:
            raise StructuralError("residual top-right cell is 0", Position(r + 1, c + 1))
        cells = []
        while True:
            p = c
            while p - 1 >= t and (rows[r] >> (p - 1)) & 1:
                p -= 1
            cells.extend(Position(r + 1, j + 1) for j in range(c, p - 1, -1))
            if r == m - 1:
                break
            r += 1
            c = p
            if not (rows[r] >> c) & 1:
                raise StructuralError("zigzag path cannot continue downwards", Position(r + 1, c + 1))
        if cells[-1].col != t + 1:
            raise StructuralError("path does not reach the residual's first column", cells[-1])
        for pos in cells:
            rows[pos.row - 1] &= ~(1 << (pos.col - 1))
        if rows[t]:
            stray = (rows[t] & -rows[t]).bit_length()
            raise StructuralError("ones left in the residual's first row", Position(t + 1, stray))
        for i in range(t, m):
            if (rows[i] >> t) & 1:
                raise StructuralError("ones left in the residual's first column", Position(i + 1, t + 1))
        paths.append(ZigzagPath(tuple(cells), RL, t == 0))
    return paths


def crucial_and_corner_ones(path: ZigzagPath):
    """Crucial cells (a horizontal run turning downwards) and their corners.

    Defined for LR paths; the corner of a crucial cell is the cell one row
    down and one column left.
    """
    if path.orientation != LR:
        raise DomainError("crucial ones are defined for LR paths")
    cells = path.cells
    crucial = []
    corner = []
    for prev, cur, nxt in zip(cells, cells[1:], cells[2:]):
        if prev.row == cur.row and nxt.row == cur.row + 1:
            crucial.append(cur)
            if cur.col < 2:
                raise StructuralError("corner falls outside the matrix", cur)
            corner.append(Position(cur.row + 1, cur.col - 1))
    return crucial, corner


def random_lr_path(m: int, n: int, seed: int) -> ZigzagPath:
    """Uniform random LR path from (1,1) to (m,n) whose first step is right and last step is down."""
    if m < 2 or n < 2:
        raise DomainError("need m, n >= 2")
    moves = ["R"] * (n - 2) + ["D"] * (m - 2)
    random.Random(seed).shuffle(moves)
    moves = ["R"] + moves + ["D"]
    r, c = 1, 1
    cells = [Position(1, 1)]
    for mv in moves:
        if mv == "R":
            c += 1
        else:
            r += 1
        cells.append(Position(r, c))
    return ZigzagPath(tuple(cells), LR, True)


def path_from_moves(start: tuple[int, int], moves: str, orientation: str) -> ZigzagPath:
    """Build a path from a move string of 'H' (horizontal) and 'D' (down) steps."""
    r, c = start
    side = -1 if orientation == RL else 1
    cells = [Position(r, c)]
    for mv in moves:
        if mv == "H":
            c += side
        elif mv == "D":
            r += 1
        else:
            raise DomainError(f"unknown move {mv!r}")
        cells.append(Position(r, c))
    return ZigzagPath(tuple(cells), orientation)
