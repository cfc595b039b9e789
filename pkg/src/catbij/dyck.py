"""Dyck paths and their statistics.

A Dyck path of semilength n is a word of n 0's (north steps) and n 1's (east
steps) in which every prefix has at least as many 0's as 1's; drawn as a
lattice path from (0,0) to (n,n) it stays weakly above the diagonal.
Positions are 1-based.

A descent of the path is a position i with steps (1, 0) at (i, i+1) — a
valley of the lattice path.  The valley's coordinates are those of the
lattice point right after its east step, and the x- and y-coordinate sets
determine the path (``valleys`` / ``from_valleys`` below).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import (
    CeilingExceeded,
    NonBinaryCharacter,
    PrefixViolation,
    UnbalancedCounts,
)
from .permutations import DEFAULT_MAX_N

NORTH = 0
EAST = 1


@dataclass(frozen=True)
class DyckPath:
    """An immutable Dyck path; ``steps`` holds 0 = north, 1 = east.

    >>> DyckPath((0, 1, 0, 1)).n
    2
    >>> str(DyckPath((0, 0, 1, 1)))
    '0011'
    """

    steps: tuple[int, ...]

    def __post_init__(self):
        steps = tuple(self.steps)
        object.__setattr__(self, "steps", steps)
        if any(s not in (0, 1) for s in steps):
            raise NonBinaryCharacter(f"steps must be 0 or 1: {steps}")
        if not steps:
            raise UnbalancedCounts("empty step word")
        zeros = steps.count(0)
        ones = len(steps) - zeros
        if zeros != ones:
            raise UnbalancedCounts(f"{zeros} north vs {ones} east steps")
        height = 0
        for i, s in enumerate(steps, start=1):
            height += 1 if s == NORTH else -1
            if height < 0:
                raise PrefixViolation(f"prefix of length {i} dips below the diagonal")

    @property
    def n(self) -> int:
        return len(self.steps) // 2

    def __str__(self) -> str:
        return "".join(map(str, self.steps))


def parse_path(text: str) -> DyckPath:
    """Parse a 0/1 word; blanks are allowed as visual grouping and ignored.

    >>> parse_path("01 001 011 01 01").n
    6
    """
    cleaned = []
    for ch in text:
        if ch in " \t":
            continue
        if ch not in "01":
            raise NonBinaryCharacter(f"unexpected character {ch!r} in path text")
        cleaned.append(int(ch))
    return DyckPath(tuple(cleaned))


@dataclass(frozen=True)
class PathStats:
    des: frozenset[int]
    maj: int
    maj0: int
    maj1: int


def path_stats(D: DyckPath) -> PathStats:
    """Descent positions, their sum, and the per-letter prefix-count splits.

    maj0 (resp. maj1) sums, over all descents i, the number of 0's (resp.
    1's) among the first i letters; maj0 + maj1 = maj by construction.
    """
    steps = D.steps
    des = []
    maj0 = maj1 = 0
    zeros = 0
    for i in range(1, len(steps)):
        if steps[i - 1] == NORTH:
            zeros += 1
        if steps[i - 1] == EAST and steps[i] == NORTH:
            des.append(i)
            maj0 += zeros
            maj1 += i - zeros
    return PathStats(des=frozenset(des), maj=sum(des), maj0=maj0, maj1=maj1)


@dataclass(frozen=True)
class ValleySet:
    """The x- and y-coordinates of a path's valleys, strictly increasing.

    The invariants (equal lengths, entries in 1..n-1, elementwise
    xs[l] <= ys[l]) characterize the valley sets of Dyck paths of
    semilength n, so ``from_valleys`` is total on valid instances.
    """

    n: int
    xs: tuple[int, ...]
    ys: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "xs", tuple(self.xs))
        object.__setattr__(self, "ys", tuple(self.ys))
        if self.n < 1:
            raise ValueError("semilength must be at least 1")
        if len(self.xs) != len(self.ys):
            raise ValueError(f"|xs| != |ys|: {self.xs} vs {self.ys}")
        for seq in (self.xs, self.ys):
            if any(not 1 <= v <= self.n - 1 for v in seq):
                raise ValueError(f"coordinates must lie in 1..{self.n - 1}: {seq}")
            if any(a >= b for a, b in zip(seq, seq[1:])):
                raise ValueError(f"coordinates must strictly increase: {seq}")
        if any(x > y for x, y in zip(self.xs, self.ys)):
            raise ValueError(
                f"need xs[l] <= ys[l] elementwise (path above diagonal): "
                f"{self.xs} vs {self.ys}"
            )

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "xs": list(self.xs), "ys": list(self.ys)})

    @classmethod
    def from_json(cls, text: str) -> "ValleySet":
        data = json.loads(text)
        return cls(n=data["n"], xs=tuple(data["xs"]), ys=tuple(data["ys"]))


def valleys(D: DyckPath) -> ValleySet:
    """Valley coordinates: after i steps with x east and y north, the valley
    at descent position i sits at (x, y).

    >>> v = valleys(parse_path("010010110101"))
    >>> v.xs, v.ys
    ((1, 2, 4, 5), (1, 3, 4, 5))
    """
    xs, ys = [], []
    easts = 0
    for i, s in enumerate(D.steps[:-1], start=1):
        easts += s
        if s == EAST and D.steps[i] == NORTH:
            xs.append(easts)
            ys.append(i - easts)
    return ValleySet(n=D.n, xs=tuple(xs), ys=tuple(ys))


def from_valleys(v: ValleySet) -> DyckPath:
    """The unique path with the given valleys: alternate north runs of sizes
    y_1, y_2-y_1, ..., n-y_k with east runs x_1, x_2-x_1, ..., n-x_k.
    """
    n = v.n
    steps: list[int] = []
    prev_x = prev_y = 0
    for x, y in zip(v.xs, v.ys):
        steps.extend([NORTH] * (y - prev_y))
        steps.extend([EAST] * (x - prev_x))
        prev_x, prev_y = x, y
    steps.extend([NORTH] * (n - prev_y))
    steps.extend([EAST] * (n - prev_x))
    return DyckPath(tuple(steps))


def area(D: DyckPath) -> int:
    """Number of complete unit cells strictly between the path and diagonal.

    Computed as the sum over north steps of (k-1) - e_k, where e_k counts the
    east steps before the k-th north step.
    """
    total = easts = norths = 0
    for s in D.steps:
        if s == NORTH:
            total += norths - easts
            norths += 1
        else:
            easts += 1
    return total


def bounce(D: DyckPath) -> int:
    """Bounce statistic of the path.

    The bounce path starts at (0,0), travels north to the height at which the
    next east step of D begins, then east to the diagonal, and repeats from
    each touch point (a, a); from there the next peak height is the number of
    north steps of D preceding its (a+1)-th east step.  The statistic sums
    n - a over the interior touch points 0 < a < n.
    """
    n = D.n
    norths_before_east = []
    norths = 0
    for s in D.steps:
        if s == NORTH:
            norths += 1
        else:
            norths_before_east.append(norths)
    total = 0
    a = 0
    while a < n:
        a = norths_before_east[a]
        if a < n:
            total += n - a
    return total


def valley_complement(D: DyckPath) -> DyckPath:
    """The involution replacing the valley sets (X, Y) by their complements
    in {1..n-1}, swapped: X' = complement of Y, Y' = complement of X.

    >>> str(valley_complement(parse_path("01010011")))
    '00011101'
    """
    v = valleys(D)
    old_xs, old_ys = set(v.xs), set(v.ys)
    full = range(1, D.n)
    xs = tuple(i for i in full if i not in old_ys)
    ys = tuple(i for i in full if i not in old_xs)
    return from_valleys(ValleySet(n=D.n, xs=xs, ys=ys))


def reflect(D: DyckPath) -> DyckPath:
    """The involution mapping each valley (x, y) to (n-y, n-x).

    Geometrically this is reflection along the antidiagonal, i.e. reversing
    the word and swapping the step letters.
    """
    v = valleys(D)
    n = D.n
    pairs = sorted((n - y, n - x) for x, y in zip(v.xs, v.ys))
    xs = tuple(x for x, _ in pairs)
    ys = tuple(y for _, y in pairs)
    return from_valleys(ValleySet(n=n, xs=xs, ys=ys))


def enumerate_dyck(n: int, max_n: int = DEFAULT_MAX_N) -> Iterator[DyckPath]:
    """Stream all Dyck paths of semilength n in lex order of the step word."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > max_n:
        raise CeilingExceeded(n, max_n)

    steps: list[int] = []

    def walk(zeros: int, ones: int) -> Iterator[DyckPath]:
        if zeros == n and ones == n:
            yield DyckPath(tuple(steps))
            return
        if zeros < n:
            steps.append(NORTH)
            yield from walk(zeros + 1, ones)
            steps.pop()
        if ones < zeros:
            steps.append(EAST)
            yield from walk(zeros, ones + 1)
            steps.pop()

    return walk(0, 0)
