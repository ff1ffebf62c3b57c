"""
Maximum pattern-avoiding matrices
=================================

How many ones can an m x n (0,1)-matrix hold without containing a given
permutation pattern?  This walks through the closed forms, builds matrices
that reach them and pulls them apart again into zigzag paths.
"""

from patmat import (
    BinaryMatrix,
    PermutationPattern,
    construct_312_maximal,
    construct_canonical_identity_avoiding,
    contains_pattern,
    formula_max_ones,
    greedy_saturate,
    peel_zigzag_decomposition,
    random_lr_path,
    validate_maximal,
)

# the identity pattern 123: at most two ones per diagonal
p123 = PermutationPattern.from_word("123")
print("max ones, 6x6 avoiding 123:", formula_max_ones(6, 6, p123))

A = construct_canonical_identity_avoiding(6, 6, 3)
print(A.render())
print("ones:", A.count_ones(), "contains 123:", contains_pattern(A, p123))

# every maximum matrix splits into k-1 nested zigzag paths
for path in peel_zigzag_decomposition(A, 3):
    print("path of length", len(path), "from", path.cells[0], "to", path.cells[-1])

# greedy filling never gets stuck below the maximum for these patterns
B = greedy_saturate(BinaryMatrix.zeros(6, 8), PermutationPattern.identity(4), choice_seed=3)
print("\ngreedy 6x8 avoiding 1234 reaches", B.count_ones(), "ones")
print(B.render())

# 312: a different family, but the same kind of saturation law
p312 = PermutationPattern.from_word("312")
path = random_lr_path(7, 9, seed=1)
C = construct_312_maximal(7, 9, path, choice_seed=1)
print(f"\n312-avoiding 7x9 with {C.count_ones()} ones (bound {formula_max_ones(7, 9, p312)[0]})")
print(C.render())
print("maximal:", validate_maximal(C, p312))

# k 1 2 ... (k-1) for k >= 4 only has a conjectured value
print("\n51234 on 8x8:", formula_max_ones(8, 8, PermutationPattern.from_word("51234")))
