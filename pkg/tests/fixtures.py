"""Matrices and paths frozen from worked examples, shared by the test modules."""

from patmat import LR, RL, PermutationPattern, parse_matrix, path_from_moves

P123 = PermutationPattern.from_word("123")
P312 = PermutationPattern.from_word("312")
S3_WORDS = ("123", "132", "213", "231", "312", "321")

PI3 = parse_matrix("001\n100\n010")

# 8x8, 12-avoiding, 15 ones on one complete RL path
ZIGZAG_8x8 = parse_matrix(
    """
    00000001
    00000001
    00000111
    00000100
    00111100
    00100000
    11100000
    10000000
    """
)

# 6x6, 123-avoiding, twenty ones each
TWO_ZIGZAGS = [
    parse_matrix("000111\n001111\n001110\n011100\n111100\n111000"),
    parse_matrix("111111\n100011\n100110\n101100\n101000\n111000"),
    parse_matrix("001111\n011011\n010010\n110110\n100100\n111100"),
]
TWO_ZIGZAGS_FIRST_BASE = path_from_moves((1, 6), "HHDHDDHDHD", RL)

# 6x6 maximal 123-avoiding band
BAND_6x6 = parse_matrix("000111\n001111\n011110\n111100\n111000\n110000")

# 6x8, 1234-avoiding, 33 ones
BAND_6x8 = parse_matrix(
    """
    00000111
    00001111
    01111111
    11111111
    11111110
    11110000
    """
)
BAND_6x8_BASE = path_from_moves((1, 8), "HHDHDHHHDHDD", RL)

# 8x8 12345-avoiding: three paths of lengths 15, 13, 11 that admit no fourth
ABC_8x8 = parse_matrix(
    """
    00001111
    00001011
    00111111
    00101101
    11111011
    10110110
    11101100
    11111000
    """
)
# the same with nine more ones; peels into 15, 13, 11, 9
XYZU_8x8 = parse_matrix(
    """
    11111111
    10001111
    10111111
    10101101
    11111011
    11110110
    11101100
    11111000
    """
)

# maximal 312-avoiding matrices with a (m-2)x(n-2) zero block, and two more
THREE_5x5 = [
    parse_matrix("11000\n11000\n11000\n11111\n11111"),
    parse_matrix("11111\n00011\n00011\n00011\n11111"),
    parse_matrix("11111\n11111\n10001\n10001\n10001"),
]
EXTRA_312 = [
    parse_matrix("11110\n01110\n11010\n10011\n10011"),
    parse_matrix("111100\n011100\n110100\n100111\n100111\n100001"),
]

# 8x10 312-avoiding with a one in the top right corner, 32 ones
UPPER_8x10 = parse_matrix(
    """
    1111111111
    0000000111
    0000001101
    0000111001
    0001100001
    0011000001
    0010000001
    1110000001
    """
)

# maximal 312-avoiding, same zero region in the top right
SAME_FERRERS_8x8 = [
    parse_matrix("11000000\n11100000\n11110000\n10111000\n10011100\n10001110\n10000111\n10000011"),
    parse_matrix("11000000\n11100000\n01110000\n00111000\n00111100\n11101110\n10000111\n10000011"),
    parse_matrix("11000000\n11100000\n11110000\n00111000\n10111100\n00001110\n10001111\n10000011"),
]

SHADOW_PATH_12 = path_from_moves((1, 1), "HHHHDDDHHHDDHHDDDHHDDD", LR)
SHADOW_12x12 = parse_matrix(
    """
    111110000000
    000110000000
    000110000000
    000111110000
    000000110000
    000000111100
    000000001100
    000000001100
    000000001111
    000000000011
    000000000011
    111111111111
    """
)

CRUCIAL_PATH = path_from_moves((1, 1), "HHHDHHDDHHDHDDHDHHD", LR)
CRUCIAL_CELLS = [(1, 4), (2, 6), (4, 8), (5, 9), (7, 10), (8, 12)]
CORNER_CELLS = [(2, 3), (3, 5), (5, 7), (6, 8), (8, 9), (9, 11)]
# path together with its corner cells
CRUCIAL_DISPLAY = parse_matrix(
    """
    111100000000
    001111000000
    000011000000
    000001110000
    000000111000
    000000011000
    000000001100
    000000001111
    000000000011
    """
)

# 10x10 worked run of the recursive 312 construction
ALGORITHM_PATH = path_from_moves((1, 1), "HHHDDHHHDDDHDDHHDD", LR)
ALGORITHM_CHOICES = [5, 2, 3, "delete", "delete", 3, "delete", "delete", "delete", "delete", 2]
ALGORITHM_START = parse_matrix(
    """
    1111000000
    0001000000
    0001111000
    0000001000
    0000001000
    0000001100
    0000000100
    0000000111
    0000000001
    1000000001
    """
)
ALGORITHM_FINAL = parse_matrix(
    """
    1111000000
    0111000000
    0101111000
    0000111000
    0000101000
    0000101100
    0000001100
    0000001111
    0000001111
    1101101001
    """
)

# 8x8, 51234-avoiding, 48 ones
K1_8x8 = parse_matrix(
    """
    11111111
    00011111
    00111111
    01111111
    11111101
    11111001
    11110001
    11100001
    """
)

GUESS_5x5 = parse_matrix("11100\n11110\n10111\n10011\n10001")
# fully indecomposable and 312-permutation-avoiding, permanent 16
BETTER_5x5 = parse_matrix("11100\n11100\n10111\n10111\n10101")

J4_FACTORS = [(4, 3, 2, 1), (3, 2, 1, 4), (2, 1, 4, 3), (1, 4, 3, 2)]
