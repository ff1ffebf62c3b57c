"""Closed-form maxima for pattern-avoiding (0,1)-matrices."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import DomainError
from ..matrix import BinaryMatrix, PermutationPattern


def max_ones_identity_avoiding(m: int, n: int, k: int) -> int:
    """Maximum number of ones in an m x n matrix avoiding 12...k.

    Each Toeplitz diagonal can hold at most k-1 ones; for k = 2 this is
    m + n - 1, and in general (k-1)(m+n-(k-1)).
    """
    if k < 2 or k > min(m, n):
        raise DomainError(f"need 2 <= k <= min(m, n); got m={m}, n={n}, k={k}")
    return (k - 1) * (m + n - (k - 1))


def max_ones_312_avoiding(m: int, n: int) -> int:
    """Maximum number of ones in a 312-avoiding m x n matrix."""
    if m < 1 or n < 1:
        raise DomainError(f"dimensions must be positive, got {m}x{n}")
    if min(m, n) == 1:
        return m * n
    return 2 * (m + n - 2)


def conjectured_max_ones_k1(m: int, n: int, k: int) -> int:
    """Conjectured maximum for the pattern k 1 2 ... (k-1), k >= 4.

    Same value as the 12...k bound; proven only for k = 3 (the 312 case).
    """
    if k < 3 or k > min(m, n):
        raise DomainError(f"need 3 <= k <= min(m, n); got m={m}, n={n}, k={k}")
    return (k - 1) * (m + n - (k - 1))


def k1_pattern(k: int) -> PermutationPattern:
    """The pattern (k, 1, 2, ..., k-1)."""
    return PermutationPattern((k,) + tuple(range(1, k)))


def _symmetry_images(sigma: PermutationPattern):
    """The patterns equivalent to ``sigma`` under row/column reversal and transpose.

    Reversing matrix rows reverses the pattern word, reversing columns
    complements it and transposing inverts it.
    """
    for inv in (False, True):
        base = sigma.inverse() if inv else sigma
        for rev in (False, True):
            for comp in (False, True):
                p = base
                if rev:
                    p = p.reverse()
                if comp:
                    p = p.complement()
                yield p


def classify_pattern(sigma: PermutationPattern) -> str:
    """Return "identity", "k1" or "other" up to matrix symmetries.

    "identity" covers 12...k and k...21; "k1" covers k12...(k-1) and its
    seven images (for k = 3 that is 312, 213, 132 and 231).
    """
    k = sigma.k
    images = {p.values for p in _symmetry_images(sigma)}
    if PermutationPattern.identity(k).values in images:
        return "identity"
    if k >= 3 and k1_pattern(k).values in images:
        return "k1"
    return "other"


def formula_max_ones(m: int, n: int, sigma: PermutationPattern):
    """Formula value for ``sigma`` where one is known or conjectured.

    Returns ``(value, status)`` with status "proven" or "conjectured", or
    ``(None, None)`` when no formula applies.  Sizes where the pattern cannot
    fit at all give m*n.  The formulas are symmetric in m and n, so the
    transpose images need no special handling.
    """
    k = sigma.k
    if k > min(m, n):
        return m * n, "proven"
    if k == 1:
        return 0, "proven"
    kind = classify_pattern(sigma)
    if kind == "identity":
        return max_ones_identity_avoiding(m, n, k), "proven"
    if kind == "k1":
        if k == 3:
            return max_ones_312_avoiding(m, n), "proven"
        return conjectured_max_ones_k1(m, n, k), "conjectured"
    return None, None


@dataclass(frozen=True)
class StaircaseProfile:
    """Row i keeps its e_i leftmost cells; the rest of the row is removed.

    The retained counts are nondecreasing down the rows, so the removed cells
    form a partition shape in the upper right corner.
    """

    e: tuple[int, ...]
    m: int
    n: int

    def __post_init__(self):
        e = tuple(int(x) for x in self.e)
        object.__setattr__(self, "e", e)
        if len(e) != self.m:
            raise DomainError(f"profile has {len(e)} entries for m={self.m}")
        if any(x < 0 or x > self.n for x in e):
            raise DomainError(f"profile entries must lie in 0..{self.n}: {e}")
        if any(a > b for a, b in zip(e, e[1:])):
            raise DomainError(f"profile must be nondecreasing: {e}")

    def cells(self) -> BinaryMatrix:
        """Mask of the retained cells."""
        return BinaryMatrix(self.m, self.n, tuple((1 << x) - 1 for x in self.e))


def staircase_max_ones(profile: StaircaseProfile) -> int:
    """Upper bound max_i (e_i + m - i) on a 12-avoiding filling of the staircase."""
    m = profile.m
    return max(e + m - i for i, e in enumerate(profile.e, start=1))
