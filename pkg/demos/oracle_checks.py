"""
Checking the formulas by brute force
====================================

For small matrices every filling can be scanned, so the closed forms can be
checked directly, and the same goes for the conjectured value for 4123.
"""

from patmat import PermutationPattern, brute_max_ones, check_conjecture_k1, enumerate_maximal

for word in ("12", "123", "312", "132", "2413"):
    r = brute_max_ones(4, 5, PermutationPattern.from_word(word))
    print(f"{word:>5}  exhaustive {r.exhaustive_max:>2}  formula {r.formula_value}  scanned {r.matrices_scanned}")

# all maximal 123-avoiding 3x3 matrices: there are only three
for A in enumerate_maximal(3, 3, PermutationPattern.from_word("123")):
    print()
    print(A.render())

r = check_conjecture_k1(4, 4, 4)
print("\n4123 on 4x4: max", r.exhaustive_max, "conjectured", r.formula_value)
print("every smaller avoiding matrix has an addable zero:", r.extra["saturation_holds"])
