"""Permutations of {1..n} with descent statistics and pattern avoidance.

Conventions used throughout the package:

- Permutations are words in one-line notation on the values {1..n}; positions
  and values are both 1-based.
- A position ``i < n`` is a descent of ``w`` if ``w[i] > w[i+1]``; every other
  position is an ascent, and the last position ``n`` ALWAYS counts as an
  ascent.  This deviates from the common convention (where ``n`` is neither)
  and is load-bearing: every descent block is followed by an ascent.
- ``ides``/``imaj`` are the descent set / major index of the inverse.

The pattern machinery exists in two forms: a naive subsequence scan
(``contains_naive``, works for any pattern length, serves as the oracle) and
linear recognizers for the six patterns of length 3 (used by ``contains`` and
the enumeration stream).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CeilingExceeded

#: Default ceiling for exhaustive enumeration (Cat_12 = 208012 objects).
DEFAULT_MAX_N = 12


@dataclass(frozen=True)
class Permutation:
    """An immutable permutation of {1..n} in one-line notation.

    >>> Permutation((2, 1, 3)).n
    3
    >>> str(Permutation((6, 2, 1, 5, 4, 3)))
    '[6,2,1,5,4,3]'
    """

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        n = len(word)
        if n < 1:
            raise ValueError("permutation must have length at least 1")
        if sorted(word) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {list(word)}")

    @property
    def n(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.word)) + "]"

    def __iter__(self):
        return iter(self.word)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def parse_permutation(text: str) -> Permutation:
    """Parse one-line notation, with or without the square brackets.

    >>> parse_permutation("[6,2,1,5,4,3]").word
    (6, 2, 1, 5, 4, 3)
    >>> parse_permutation("2, 1") == Permutation((2, 1))
    True
    """
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    try:
        word = tuple(int(part) for part in body.split(","))
    except ValueError:
        raise ValueError(f"cannot parse permutation from {text!r}") from None
    return Permutation(word)


@dataclass(frozen=True)
class DescentData:
    """The four descent/ascent sets of a permutation.

    ``asc`` and ``iasc`` always contain ``n`` (see module docstring).
    """

    des: frozenset[int]
    asc: frozenset[int]
    ides: frozenset[int]
    iasc: frozenset[int]


@dataclass(frozen=True)
class PermStats:
    des: int
    asc: int
    maj: int
    imaj: int
    inv: int


def _descents(word: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(word)) if word[i - 1] > word[i])


def _inverse_word(word: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(word)
    for i, v in enumerate(word, start=1):
        inv[v - 1] = i
    return tuple(inv)


def inverse(p: Permutation) -> Permutation:
    """The group inverse: value v sits at position p^-1(v).

    >>> inverse(Permutation((2, 3, 1))).word
    (3, 1, 2)
    """
    return Permutation(_inverse_word(p.word))


def reverse(p: Permutation) -> Permutation:
    """The reversal involution [w_1,...,w_n] -> [w_n,...,w_1]."""
    return Permutation(p.word[::-1])


def descent_data(p: Permutation) -> DescentData:
    """All four descent/ascent sets, with n counted as an ascent.

    >>> d = descent_data(Permutation((6, 2, 1, 5, 4, 3)))
    >>> sorted(d.des), sorted(d.ides)
    ([1, 2, 4, 5], [1, 3, 4, 5])
    """
    n = p.n
    des = _descents(p.word)
    ides = _descents(_inverse_word(p.word))
    full = frozenset(range(1, n))
    asc = (full - des) | {n}
    iasc = (full - ides) | {n}
    return DescentData(des=des, asc=asc, ides=ides, iasc=iasc)


def perm_stats(p: Permutation) -> PermStats:
    """Descent counts, major indices and the inversion number."""
    d = descent_data(p)
    w = p.word
    inv = sum(1 for i, j in itertools.combinations(range(p.n), 2) if w[i] > w[j])
    return PermStats(
        des=len(d.des),
        asc=len(d.asc),
        maj=sum(d.des),
        imaj=sum(d.ides),
        inv=inv,
    )


# ---------------------------------------------------------------------------
# pattern containment
# ---------------------------------------------------------------------------

def _pattern_word(pattern) -> tuple[int, ...]:
    if isinstance(pattern, Permutation):
        return pattern.word
    if isinstance(pattern, int):
        # convenience: 231 -> (2, 3, 1); single digits only
        digits = tuple(int(c) for c in str(pattern))
        return Permutation(digits).word
    return Permutation(tuple(pattern)).word


def _has_132(word: Sequence[int]) -> bool:
    # Right-to-left scan.  The stack holds decreasing candidates for the
    # largest element of the pattern; ``mid`` is the largest value known to
    # have a larger element somewhere to its left.
    mid = None
    stack: list[int] = []
    for v in reversed(word):
        if mid is not None and v < mid:
            return True
        while stack and v > stack[-1]:
            mid = stack.pop()
        stack.append(v)
    return False


def _has_123(word: Sequence[int]) -> bool:
    # lo = minimum so far; mid = smallest value with a smaller one before it.
    lo = mid = None
    for v in word:
        if mid is not None and v > mid:
            return True
        if lo is None or v < lo:
            lo = v
        elif v > lo and (mid is None or v < mid):
            mid = v
    return False


def _neg(word: Sequence[int]) -> list[int]:
    return [-v for v in word]


# Each length-3 pattern reduces to the 132 or 123 scan after reversal and/or
# negation, both of which act bijectively on pattern occurrences.
_FAST_RECOGNIZERS = {
    (1, 3, 2): lambda w: _has_132(w),
    (2, 3, 1): lambda w: _has_132(list(reversed(w))),
    (3, 1, 2): lambda w: _has_132(_neg(w)),
    (2, 1, 3): lambda w: _has_132(list(reversed(_neg(w)))),
    (1, 2, 3): lambda w: _has_123(w),
    (3, 2, 1): lambda w: _has_123(_neg(w)),
}


def contains_naive(p: Permutation | Sequence[int], pattern) -> bool:
    """Oracle: scan all length-k subsequences for an order-isomorphic copy."""
    word = p.word if isinstance(p, Permutation) else tuple(p)
    pat = _pattern_word(pattern)
    k = len(pat)
    if k > len(word):
        return False
    rank = tuple(sorted(range(k), key=lambda i: pat[i]))
    for sub in itertools.combinations(word, k):
        # sub matches pat iff sorting sub's positions by value gives rank
        if tuple(sorted(range(k), key=lambda i: sub[i])) == rank:
            return True
    return False


def contains(p: Permutation | Sequence[int], pattern) -> bool:
    """True iff some subsequence of p is order-isomorphic to the pattern.

    Uses a linear recognizer for the six patterns of length 3, the naive
    scan otherwise.
    """
    word = p.word if isinstance(p, Permutation) else tuple(p)
    pat = _pattern_word(pattern)
    fast = _FAST_RECOGNIZERS.get(pat)
    if fast is not None:
        return fast(word)
    return contains_naive(word, pat)


def avoids(p: Permutation | Sequence[int], pattern) -> bool:
    """True iff p contains no copy of the pattern.

    >>> avoids(Permutation((6, 2, 1, 5, 4, 3)), (2, 3, 1))
    True
    >>> avoids(Permutation((2, 3, 1)), (2, 3, 1))
    False
    """
    return not contains(p, pattern)


def enumerate_avoiders(
    n: int,
    pattern,
    max_n: int = DEFAULT_MAX_N,
) -> Iterator[Permutation]:
    """Stream all pattern-avoiding permutations of {1..n} in lex order.

    Depth-first generation over avoiding prefixes: pattern containment is
    monotone under extension, so pruning a containing prefix is sound and the
    stream is exhaustive and duplicate-free.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > max_n:
        raise CeilingExceeded(n, max_n)
    pat = _pattern_word(pattern)
    fast = _FAST_RECOGNIZERS.get(pat)
    has = fast if fast is not None else (lambda w: contains_naive(w, pat))

    prefix: list[int] = []
    free = [True] * (n + 1)

    def walk() -> Iterator[Permutation]:
        if len(prefix) == n:
            yield Permutation(tuple(prefix))
            return
        for v in range(1, n + 1):
            if not free[v]:
                continue
            prefix.append(v)
            free[v] = False
            if not has(prefix):
                yield from walk()
            prefix.pop()
            free[v] = True

    return walk()


# ---------------------------------------------------------------------------
# 231-avoiders: descent-block geometry and reconstruction
# ---------------------------------------------------------------------------

def descent_run_before(p: Permutation, j: int) -> int:
    """Length of the maximal descent run immediately left of the ascent j.

    Equals ``j - 1 - j'`` where ``j'`` is the previous ascent (0 if none).

    >>> descent_run_before(Permutation((6, 2, 1, 5, 4, 3)), 3)
    2
    """
    d = descent_data(p)
    if j not in d.asc:
        raise ValueError(f"position {j} is not an ascent of {p}")
    prev = max((a for a in d.asc if a < j), default=0)
    return j - 1 - prev


def reconstruct_231(n: int, des: Iterable[int], ides: Iterable[int]) -> Permutation:
    """Rebuild the unique 231-avoider with the given descent sets.

    The values placed on descents are forced to {i+1 : i in ides}; the
    remaining values go to the ascents in increasing order; then each descent,
    scanned right to left, takes the smallest still-unused value exceeding its
    right neighbour.

    Raises ValueError when no 231-avoider has this descent data, i.e. when
    the sets have different sizes or fail the sorted elementwise condition
    des[l] <= ides[l].

    >>> reconstruct_231(6, {1, 2, 4, 5}, {1, 3, 4, 5}).word
    (6, 2, 1, 5, 4, 3)
    """
    des_sorted = sorted(set(des))
    ides_sorted = sorted(set(ides))
    if len(des_sorted) != len(ides_sorted):
        raise ValueError(
            f"descent sets have different sizes: {des_sorted} vs {ides_sorted}"
        )
    if any(i < 1 or i > n - 1 for i in des_sorted + ides_sorted):
        raise ValueError("descent positions must lie in 1..n-1")
    if any(i > i_ for i, i_ in zip(des_sorted, ides_sorted)):
        raise ValueError(
            f"no 231-avoider: need des[l] <= ides[l] elementwise, "
            f"got {des_sorted} vs {ides_sorted}"
        )

    word = [0] * (n + 1)  # 1-based
    descent_values = {i + 1 for i in ides_sorted}
    ascent_values = sorted(set(range(1, n + 1)) - descent_values)
    ascents = sorted(set(range(1, n + 1)) - set(des_sorted))
    for pos, val in zip(ascents, ascent_values):
        word[pos] = val

    unused = sorted(descent_values)
    for pos in reversed(des_sorted):
        right = word[pos + 1]
        picks = [v for v in unused if v > right]
        # The elementwise condition guarantees a pick exists; running dry
        # would be an implementation bug, not bad input.
        assert picks, (n, des_sorted, ides_sorted)
        unused.remove(picks[0])
        word[pos] = picks[0]

    result = Permutation(tuple(word[1:]))
    assert _descents(result.word) == set(des_sorted)
    assert _descents(_inverse_word(result.word)) == set(ides_sorted)
    return result
