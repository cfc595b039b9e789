"""Shared goldens and hypothesis strategies."""
import itertools

from hypothesis import strategies as st

from catbij import Permutation

# The fourteen pairs of the n=4 bijection table, decoded from the source
# figure; left column is exactly the set of 231-avoiders of S_4.
FIGURE_PAIRS = [
    ((1, 2, 3, 4), "00001111"),
    ((4, 1, 2, 3), "00010111"),
    ((1, 4, 2, 3), "00011011"),
    ((1, 2, 4, 3), "00011101"),
    ((3, 1, 2, 4), "00100111"),
    ((4, 3, 1, 2), "00101011"),
    ((4, 1, 3, 2), "00101101"),
    ((1, 3, 2, 4), "00110011"),
    ((1, 4, 3, 2), "00110101"),
    ((2, 1, 3, 4), "01000111"),
    ((4, 2, 1, 3), "01001011"),
    ((2, 1, 4, 3), "01001101"),
    ((3, 2, 1, 4), "01010011"),
    ((4, 3, 2, 1), "01010101"),
]

#: Catalan numbers, index = n.
CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012]


def all_perms(n):
    return (Permutation(w) for w in itertools.permutations(range(1, n + 1)))


@st.composite
def permutations_st(draw, max_n=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    word = draw(st.permutations(list(range(1, n + 1))))
    return Permutation(tuple(word))
