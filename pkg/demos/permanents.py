"""
Permanents restricted to avoiding permutations
==============================================

The permanent of a (0,1)-matrix counts the permutation matrices under it.
Throwing away the permutations that contain a pattern gives a smaller count,
and for the all-ones matrix that count is a Catalan number.
"""

from patmat import (
    BinaryMatrix,
    PermutationPattern,
    avoiding_permanent,
    catalan,
    decompose_Jn,
    is_fully_indecomposable,
    is_sigma_permutation_avoiding,
    parse_matrix,
    permanent,
    search_max_avoiding_permanent,
)

p312 = PermutationPattern.from_word("312")

for n in range(1, 9):
    J = BinaryMatrix.ones(n, n)
    print(n, permanent(J), avoiding_permanent(J, p312).value, catalan(n))

# J_n is a sum of n permutation matrices that avoid both 123 and 312
print("\nJ_5 factors:", [p.word() for p in decompose_Jn(5)])

# a natural 5x5 candidate for the largest 312-avoiding permanent
guess = parse_matrix(
    """
    11100
    11110
    10111
    10011
    10001
    """
)
print("\ncandidate permanent:", permanent(guess))
print("fully indecomposable:", is_fully_indecomposable(guess))
print("every supported permutation avoids 312:", is_sigma_permutation_avoiding(guess, p312))

# the exhaustive search says we can do better
report = search_max_avoiding_permanent(5, p312, "fully_indecomposable_permutation_avoiding", candidate=guess)
print("\nbest possible:", report.exhaustive_max)
print(report.witness.render())
print("candidate attains it:", report.extra["candidate"]["attains_max"])
