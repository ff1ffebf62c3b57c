import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fixtures import BETTER_5x5, GUESS_5x5, P123, P312, S3_WORDS
from patmat import (
    BinaryMatrix,
    DomainError,
    PermutationList,
    PermutationPattern,
    PreconditionError,
    avoiding_permanent,
    catalan,
    decompose_Jn,
    enumerate_avoiding,
    extend_avoiding,
    is_fully_indecomposable,
    is_grassmannian,
    is_reverse_grassmannian,
    is_sigma_permutation_avoiding,
    is_subsequence,
    is_total_support,
    permanent,
    sequence_contains,
)
from patmat.analytics import permanent_bruteforce


def supported(A):
    n = A.n
    return [p for p in itertools.permutations(range(1, n + 1)) if all(A[i, p[i] - 1] for i in range(n))]


def brute_seq_contains(seq, sigma):
    k = sigma.k
    for idx in itertools.combinations(range(len(seq)), k):
        sub = [seq[i] for i in idx]
        order = sorted(sub)
        if tuple(order.index(v) + 1 for v in sub) == sigma.values:
            return True
    return False


def random_square(rng, n, density=0.5):
    return BinaryMatrix(n, n, tuple(sum(1 << j for j in range(n) if rng.random() < density) for _ in range(n)))


# permutations


def test_permutation_list_validation():
    assert PermutationList((2, 1, 3)).n == 3
    assert str(PermutationList((2, 1, 3))) == "2,1,3"
    with pytest.raises(DomainError):
        PermutationList((1, 1, 2))


def test_enumerate_examples():
    assert sum(1 for _ in enumerate_avoiding(3, P123)) == 5
    assert sum(1 for _ in enumerate_avoiding(4, P312)) == 14
    assert [p.values for p in enumerate_avoiding(2, PermutationPattern.from_word("12"))] == [(2, 1)]


@pytest.mark.parametrize("word", S3_WORDS)
def test_enumerate_matches_brute_force(word):
    sigma = PermutationPattern.from_word(word)
    for n in range(1, 7):
        expected = [p for p in itertools.permutations(range(1, n + 1)) if not brute_seq_contains(p, sigma)]
        assert [p.values for p in enumerate_avoiding(n, sigma)] == expected


def test_enumerate_longer_patterns():
    sigma = PermutationPattern.from_word("1342")
    got = [p.values for p in enumerate_avoiding(5, sigma)]
    expected = [p for p in itertools.permutations(range(1, 6)) if not brute_seq_contains(p, sigma)]
    assert got == expected and len(got) == 103


def test_catalan():
    assert [catalan(n) for n in range(9)] == [1, 1, 2, 5, 14, 42, 132, 429, 1430]
    assert catalan(30) == math.comb(60, 30) // 31
    assert catalan(40) == math.comb(80, 40) // 41
    with pytest.raises(DomainError):
        catalan(-1)


@pytest.mark.parametrize("word", S3_WORDS)
def test_catalan_counts_avoiders(word):
    sigma = PermutationPattern.from_word(word)
    for n in range(1, 9):
        assert sum(1 for _ in enumerate_avoiding(n, sigma)) == catalan(n)


def test_grassmannian():
    pi = PermutationList((5, 6, 3, 4, 1, 2))
    assert not sequence_contains(pi.values, P123)
    assert not is_grassmannian(pi) and not is_reverse_grassmannian(pi)
    assert is_grassmannian(PermutationList(tuple(range(1, 7))))
    assert is_grassmannian((1, 3, 5, 2, 4))
    for n in range(1, 9):
        assert all(is_reverse_grassmannian(p) for p in decompose_Jn(n))


# permanents


def test_permanent_examples():
    assert permanent(BinaryMatrix.ones(4, 4)) == 24
    assert permanent(BinaryMatrix.identity(5)) == 1
    assert permanent(GUESS_5x5) == 12
    assert permanent(BinaryMatrix.zeros(3, 3)) == 0
    assert permanent(BinaryMatrix.ones(16, 16)) == math.factorial(16)


def test_permanent_needs_square():
    with pytest.raises(DomainError):
        permanent(BinaryMatrix.ones(2, 3))
    with pytest.raises(DomainError):
        avoiding_permanent(BinaryMatrix.ones(2, 3), P123)


def test_permanent_matches_backtracking():
    rng = random.Random(3)
    for _ in range(300):
        n = rng.randint(1, 8)
        A = random_square(rng, n, rng.choice([0.3, 0.5, 0.8]))
        assert permanent(A) == permanent_bruteforce(A)


def test_permanent_large_sparse():
    # band matrix with a Fibonacci permanent, exercises the wide accumulator
    n = 18
    A = BinaryMatrix.from_positions(n, n, [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if abs(i - j) <= 1])
    fib = [1, 1]
    while len(fib) <= n:
        fib.append(fib[-1] + fib[-2])
    assert permanent(A) == fib[n]


def test_avoiding_permanent_examples():
    assert avoiding_permanent(BinaryMatrix.ones(4, 4), P123).value == 14
    assert avoiding_permanent(BinaryMatrix.ones(3, 3), P312).value == 5
    report = avoiding_permanent(GUESS_5x5, P312, witnesses=True)
    assert report.value == report.witness_count == 12
    assert len(set(w.values for w in report.witnesses)) == 12
    assert report.to_dict()["value"] == 12


def test_permanent_splits_by_containment():
    rng = random.Random(5)
    for _ in range(150):
        n = rng.randint(1, 7)
        A = random_square(rng, n, 0.6)
        sigma = PermutationPattern.from_word(rng.choice(S3_WORDS + ("21", "1234", "2413")))
        perms = supported(A)
        containing = sum(1 for p in perms if brute_seq_contains(p, sigma))
        assert permanent(A) == avoiding_permanent(A, sigma).value + containing


def test_witnesses_are_the_avoiding_supported_permutations():
    rng = random.Random(9)
    for _ in range(50):
        n = rng.randint(1, 6)
        A = random_square(rng, n, 0.7)
        report = avoiding_permanent(A, P312, witnesses=True)
        expected = [p for p in supported(A) if not brute_seq_contains(p, P312)]
        assert sorted(w.values for w in report.witnesses) == sorted(expected)


# predicates


def test_permutation_avoiding_examples():
    assert is_sigma_permutation_avoiding(GUESS_5x5, P312)
    s12 = PermutationPattern.from_word("12")
    assert is_sigma_permutation_avoiding(BinaryMatrix.from_rows([[0, 1], [1, 0]]), s12)
    assert not is_sigma_permutation_avoiding(BinaryMatrix.identity(2), s12)


def test_permutation_avoiding_collapse():
    rng = random.Random(11)
    hits = 0
    for _ in range(300):
        n = rng.randint(1, 6)
        A = random_square(rng, n, 0.4)
        sigma = PermutationPattern.from_word(rng.choice(S3_WORDS))
        perms = supported(A)
        expected = all(not brute_seq_contains(p, sigma) for p in perms)
        assert is_sigma_permutation_avoiding(A, sigma) == expected
        if expected:
            hits += 1
            assert permanent(A) == avoiding_permanent(A, sigma).value
    assert hits > 50


def test_total_support_examples():
    for n in range(1, 6):
        assert is_total_support(BinaryMatrix.ones(n, n))
        assert is_total_support(BinaryMatrix.identity(n))
    assert not is_total_support(BinaryMatrix.from_rows([[1, 1], [0, 1]]))


def test_fully_indecomposable_examples():
    for n in range(1, 6):
        assert is_fully_indecomposable(BinaryMatrix.ones(n, n))
    for n in range(2, 6):
        assert not is_fully_indecomposable(BinaryMatrix.identity(n))
        assert is_total_support(BinaryMatrix.identity(n))
    assert is_fully_indecomposable(GUESS_5x5)
    assert is_fully_indecomposable(BETTER_5x5)


def test_support_predicates_reject_zero_and_nonsquare():
    for f in (is_total_support, is_fully_indecomposable):
        with pytest.raises(DomainError):
            f(BinaryMatrix.zeros(3, 3))
        with pytest.raises(DomainError):
            f(BinaryMatrix.ones(2, 3))


def brute_fully_indecomposable(A):
    n = A.n
    for i in range(n):
        for j in range(n):
            R = [r for r in range(n) if r != i]
            C = [c for c in range(n) if c != j]
            if n > 1 and not any(all(A[R[a], p[a]] for a in range(n - 1)) for p in itertools.permutations(C)):
                return False
    return bool(supported(A))


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.integers(0, (1 << n) - 1), min_size=n, max_size=n)))
def test_support_predicates_match_brute_force(rows):
    n = len(rows)
    A = BinaryMatrix(n, n, tuple(rows))
    if A.count_ones() == 0:
        return
    perms = supported(A)
    total = all(any(p[r - 1] == c for p in perms) for r, c in A.ones_positions())
    assert is_total_support(A) == total
    fi = brute_fully_indecomposable(A)
    assert is_fully_indecomposable(A) == fi
    if fi:
        assert is_total_support(A)


# extensions


def test_extend_example():
    pi = extend_avoiding((4, 6, 1), 6, P312)
    assert pi is not None
    assert is_subsequence((4, 6, 1), pi.values) and not sequence_contains(pi.values, P312)
    witness = (2, 4, 5, 6, 3, 1)
    assert is_subsequence((4, 6, 1), witness) and not sequence_contains(witness, P312)


def test_extend_identity_and_precondition():
    for n in range(1, 7):
        full = tuple(range(n, 0, -1))
        assert extend_avoiding(full, n, P123).values == full
    with pytest.raises(PreconditionError):
        extend_avoiding((3, 1, 2), 3, P312)
    with pytest.raises(DomainError):
        extend_avoiding((1, 1), 3, P312)
    with pytest.raises(DomainError):
        extend_avoiding((4,), 3, P312)


def test_extend_none_when_impossible():
    # nothing of length >= 1 avoids the pattern (1)
    assert extend_avoiding((), 2, PermutationPattern((1,))) is None


def test_extensions_always_exist_at_small_n():
    # no obstruction turns up for patterns of length 3 up to n = 5
    for word in S3_WORDS:
        sigma = PermutationPattern.from_word(word)
        for n in range(2, 6):
            for k in range(1, n):
                for sub in itertools.permutations(range(1, n + 1), k):
                    if not sequence_contains(sub, sigma):
                        assert extend_avoiding(sub, n, sigma) is not None


def test_extend_matches_exhaustive_search():
    rng = random.Random(13)
    for _ in range(60):
        n = rng.randint(2, 7)
        sigma = PermutationPattern.from_word(rng.choice(S3_WORDS))
        size = rng.randint(1, n)
        sub = tuple(rng.sample(range(1, n + 1), size))
        if brute_seq_contains(sub, sigma):
            continue
        expected = next(
            (
                p
                for p in itertools.permutations(range(1, n + 1))
                if is_subsequence(sub, p) and not brute_seq_contains(p, sigma)
            ),
            None,
        )
        got = extend_avoiding(sub, n, sigma)
        assert (got.values if got else None) == expected
