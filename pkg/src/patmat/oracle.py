"""Exhaustive small-instance searches used to cross-check the formulas."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterator, Optional, Sequence

from .analytics import (
    avoiding_permanent,
    is_fully_indecomposable,
    is_sigma_permutation_avoiding,
    is_total_support,
    permanent,
)
from .errors import DomainError, ResourceCapError
from .extremal.bounds import formula_max_ones, k1_pattern
from .extremal.construct import validate_maximal
from .matrix import (
    BinaryMatrix,
    PermutationPattern,
    _rows_contain_ending_last_row,
    _embeds,
    _rows_contain_through,
    _zero_based,
    contains_pattern,
)

MAX_CELLS_MAX_ONES = 25
MAX_CELLS_MAXIMAL = 20
MAX_CELLS_SATURATION = 16

CONSTRAINTS = (
    "none",
    "total_support",
    "fully_indecomposable",
    "permutation_avoiding",
    "fully_indecomposable_permutation_avoiding",
)
_PA = ("permutation_avoiding", "fully_indecomposable_permutation_avoiding")


@dataclass
class OracleReport:
    """Outcome of an exhaustive search.

    ``matrices_scanned`` counts the partial and complete fillings the search
    actually visited, so it shows how much the pruning saved against the
    2^(mn) possible fillings.
    """

    parameters: dict
    exhaustive_max: int
    formula_value: Optional[int]
    agreement: Optional[bool]
    witness: Optional[BinaryMatrix]
    matrices_scanned: int
    exhaustive: bool = True
    formula_status: Optional[str] = None
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "parameters": self.parameters,
            "exhaustive_max": self.exhaustive_max,
            "formula_value": self.formula_value,
            "formula_status": self.formula_status,
            "agreement": self.agreement,
            "witness": self.witness.render() if self.witness is not None else None,
            "matrices_scanned": self.matrices_scanned,
            "exhaustive": self.exhaustive,
            **self.extra,
        }


def _cap(m: int, n: int, limit: int):
    if m < 1 or n < 1:
        raise DomainError(f"dimensions must be positive, got {m}x{n}")
    if m * n > limit:
        raise ResourceCapError(f"{m}x{n} exceeds the exhaustive-search cap of {limit} cells")


def _row_candidates(mask: int) -> list[int]:
    """Submasks of ``mask``, most ones first, ties by increasing value."""
    subs = []
    s = mask
    while True:
        subs.append(s)
        if s == 0:
            break
        s = (s - 1) & mask
    subs.sort(key=lambda x: (-x.bit_count(), x))
    return subs


def _max_over_rows(allowed: Sequence[int], n: int, vals) -> tuple[int, tuple[int, ...], int]:
    """Maximum ones in a sigma-avoiding filling whose row i lies inside allowed[i].

    Suffixes are solved from the bottom up; the optimum of rows i+1.. is then
    an upper bound for what those rows can add below any partial filling of
    rows ..i, since a set of rows of an avoiding matrix still avoids.
    """
    m = len(allowed)
    cands = [_row_candidates(a) for a in allowed]
    suffix_best = [0] * (m + 1)
    witness: tuple[int, ...] = ()
    scanned = 0
    for top in range(m - 1, -1, -1):
        best = -1
        best_rows: list[int] = []
        rows: list[int] = []

        def rec(i, count):
            nonlocal best, best_rows, scanned
            scanned += 1
            if i == m:
                if count > best:
                    best = count
                    best_rows = list(rows)
                return
            rest = suffix_best[i + 1]
            for cand in cands[i]:
                if count + cand.bit_count() + rest <= best:
                    break  # candidates are sorted by popcount
                rows.append(cand)
                if len(rows) < len(vals) or not _rows_contain_ending_last_row(rows, n, vals):
                    rec(i + 1, count + cand.bit_count())
                rows.pop()

        rec(top, 0)
        suffix_best[top] = best
        witness = tuple(best_rows)
    return suffix_best[0], witness, scanned


def brute_max_ones(
    m: int, n: int, sigma: PermutationPattern, allowed: Optional[BinaryMatrix] = None
) -> OracleReport:
    """Exhaustive maximum number of ones in a sigma-avoiding m x n matrix.

    Rows are filled top to bottom, each trying its candidate rows with the
    most ones first.  A branch is dropped once the newest row completes an
    occurrence, or once even the best possible remaining rows cannot beat the
    incumbent.  ``allowed`` optionally restricts the ones to a mask.
    """
    _cap(m, n, MAX_CELLS_MAX_ONES)
    if allowed is not None and allowed.shape != (m, n):
        raise DomainError("allowed mask has the wrong shape")
    masks = allowed.rows if allowed is not None else ((1 << n) - 1,) * m
    best, rows, scanned = _max_over_rows(masks, n, _zero_based(sigma))
    if allowed is None:
        fval, status = formula_max_ones(m, n, sigma)
    else:
        fval, status = None, None
    return OracleReport(
        parameters={"m": m, "n": n, "sigma": sigma.word()},
        exhaustive_max=best,
        formula_value=fval,
        agreement=(fval == best) if fval is not None else None,
        witness=BinaryMatrix(m, n, rows),
        matrices_scanned=scanned,
        formula_status=status,
    )


def _avoiding_matrices(m: int, n: int, vals) -> Iterator[tuple[int, ...]]:
    """Every sigma-avoiding m x n matrix as a row tuple, lexicographically."""
    rows: list[int] = []

    def rec():
        if len(rows) == m:
            yield tuple(rows)
            return
        for cand in range(1 << n):
            rows.append(cand)
            if len(rows) < len(vals) or not _rows_contain_ending_last_row(rows, n, vals):
                yield from rec()
            rows.pop()

    yield from rec()


def _is_saturated(rows: tuple[int, ...], n: int, vals) -> bool:
    work = list(rows)
    for i, r in enumerate(rows):
        for j in range(n):
            if (r >> j) & 1:
                continue
            work[i] |= 1 << j
            hit = _rows_contain_through(work, n, vals, i, j)
            work[i] = r
            if not hit:
                return False
    return True


def enumerate_maximal(m: int, n: int, sigma: PermutationPattern) -> Iterator[BinaryMatrix]:
    """Every maximal sigma-avoiding m x n matrix, in lexicographic row order."""
    _cap(m, n, MAX_CELLS_MAXIMAL)
    vals = _zero_based(sigma)
    for rows in _avoiding_matrices(m, n, vals):
        if _is_saturated(rows, n, vals):
            yield BinaryMatrix(m, n, rows)


def check_conjecture_k1(m: int, n: int, k: int) -> OracleReport:
    """Test the conjectured maximum for k 1 2 ... (k-1) on an m x n matrix.

    Besides the exhaustive maximum, at most 16 cells every avoiding matrix
    with fewer ones than the bound is checked to have a zero that can be
    turned into a one.  A failure there is a finding, not an error: it is
    returned in ``extra["saturation_counterexample"]``.
    """
    if k < 4 or m < k or n < k:
        raise DomainError(f"need m, n >= k >= 4; got m={m}, n={n}, k={k}")
    sigma = k1_pattern(k)
    report = brute_max_ones(m, n, sigma)
    report.parameters["k"] = k
    if m * n <= MAX_CELLS_SATURATION:
        vals = _zero_based(sigma)
        bound = report.formula_value
        checked = 0
        counterexample = None
        for rows in _avoiding_matrices(m, n, vals):
            if sum(r.bit_count() for r in rows) >= bound:
                continue
            checked += 1
            if _is_saturated(rows, n, vals):
                counterexample = BinaryMatrix(m, n, rows)
                break
        report.extra["saturation_checked"] = checked
        report.extra["saturation_holds"] = counterexample is None
        report.extra["saturation_counterexample"] = (
            counterexample.render() if counterexample is not None else None
        )
    return report


def conjecture_membership(A: BinaryMatrix, k: int) -> OracleReport:
    """Check one given matrix against the conjectured bound, without a search."""
    sigma = k1_pattern(k)
    fval, status = formula_max_ones(A.m, A.n, sigma)
    avoids = not contains_pattern(A, sigma)
    ones = A.count_ones()
    return OracleReport(
        parameters={"m": A.m, "n": A.n, "sigma": sigma.word(), "k": k},
        exhaustive_max=ones,
        formula_value=fval,
        agreement=avoids and ones <= fval,
        witness=A,
        matrices_scanned=1,
        exhaustive=False,
        formula_status=status,
        extra={"avoids": avoids, "ones": ones, "maximal": validate_maximal(A, sigma)},
    )


def _flat(rows: Sequence[int], n: int) -> int:
    out = 0
    for i, r in enumerate(rows):
        out |= r << (i * n)
    return out


def _unflat(mask: int, n: int) -> tuple[int, ...]:
    full = (1 << n) - 1
    return tuple((mask >> (i * n)) & full for i in range(n))


def search_max_avoiding_permanent(
    n: int,
    sigma: PermutationPattern,
    constraint: str = "none",
    candidate: Optional[BinaryMatrix] = None,
) -> OracleReport:
    """Largest sigma-avoiding permanent of an n x n matrix meeting ``constraint``.

    Matrices are flattened to n*n-bit masks and every permutation of 1..n to
    the mask of its cells, split into those avoiding and containing sigma.
    Cells are decided in row-major order, one before zero.  The count of
    avoiding permutations inside the matrix with every undecided cell set to
    one bounds the subtree.  Under the permutation-avoiding constraints the
    objective is the plain permanent, which then equals the avoiding one, and
    a branch is dropped as soon as its decided ones hold a containing
    permutation.  ``candidate`` is scored alongside and reported in ``extra``.
    """
    if constraint not in CONSTRAINTS:
        raise DomainError(f"constraint must be one of {CONSTRAINTS}")
    if n < 1:
        raise DomainError("n must be positive")
    if n > 5 or (n == 5 and constraint not in _PA):
        raise ResourceCapError("full scans are limited to n <= 4 (n = 5 with a permutation-avoiding constraint)")
    vals = _zero_based(sigma)
    good: list[int] = []
    bad: list[int] = []
    for p in permutations(range(n)):
        rows = [1 << c for c in p]
        (bad if len(p) >= len(vals) and _embeds(rows, n, vals) else good).append(_flat(rows, n))
    pa = constraint in _PA
    cells = n * n
    everything = (1 << cells) - 1
    best = -1
    best_mask = 0
    scanned = 0

    def leaf_ok(mask):
        if constraint in ("none", "permutation_avoiding"):
            return True
        if mask == 0:
            return False
        A = BinaryMatrix(n, n, _unflat(mask, n))
        if constraint == "total_support":
            return is_total_support(A)
        return is_fully_indecomposable(A)

    def rec(idx, mask):
        nonlocal best, best_mask, scanned
        scanned += 1
        if idx == cells:
            value = sum(1 for g in good if g & mask == g)
            if value > best and leaf_ok(mask):
                best, best_mask = value, mask
            return
        loose = mask | (everything & ~((1 << idx) - 1))
        if sum(1 for g in good if g & loose == g) <= best:
            return
        bit = 1 << idx
        with_one = mask | bit
        if not pa or not any(b & with_one == b for b in bad if b & bit):
            rec(idx + 1, with_one)
        rec(idx + 1, mask)

    rec(0, 0)
    extra = {}
    if candidate is not None:
        if candidate.shape != (n, n):
            raise DomainError("candidate has the wrong shape")
        ok = _satisfies(candidate, sigma, constraint)
        value = permanent(candidate) if pa else avoiding_permanent(candidate, sigma).value
        extra["candidate"] = {
            "matrix": candidate.render(),
            "satisfies_constraint": ok,
            "value": value,
            "attains_max": ok and value == best,
        }
    return OracleReport(
        parameters={"n": n, "sigma": sigma.word(), "constraint": constraint},
        exhaustive_max=best,
        formula_value=None,
        agreement=None,
        witness=BinaryMatrix(n, n, _unflat(best_mask, n)) if best >= 0 else None,
        matrices_scanned=scanned,
        extra=extra,
    )


def _satisfies(A: BinaryMatrix, sigma, constraint: str) -> bool:
    if constraint == "none":
        return True
    if A.count_ones() == 0:
        return False
    if constraint == "total_support":
        return is_total_support(A)
    if constraint == "fully_indecomposable":
        return is_fully_indecomposable(A)
    if constraint == "permutation_avoiding":
        return is_sigma_permutation_avoiding(A, sigma)
    return is_fully_indecomposable(A) and is_sigma_permutation_avoiding(A, sigma)
