"""Bijections between pattern-avoiding permutations and Dyck paths.

The central map ``phi`` sends a 231-avoider to the Dyck path whose valley
x-coordinates are its descent set and whose valley y-coordinates are the
descent set of its inverse; it is a bijection onto all Dyck paths and adds
the two major indices: maj(phi(w)) = maj(w) + imaj(w).

Around it live:

- ``psi_perm``   -- the complementing involution on 231-avoiders,
- ``kappa``      -- the height-profile bijection from 132-avoiders,
                    which factors as reflect o valley_complement o phi o reverse,
- ``beta``       -- valley_complement o phi o inverse on 312-avoiders, which
                    carries the inversion number to the area statistic,
- ``trio_132_213`` -- the bijection S_n(132) -> S_n(213) complementing the
                    (des, maj, imaj) triple.

Pattern preconditions are checked eagerly by default and raise the typed
errors from ``catbij.errors``; pass ``check=False`` in hot enumeration loops
where the input class is already known.
"""
from __future__ import annotations

from .dyck import DyckPath, ValleySet, from_valleys, reflect, valley_complement, valleys
from .errors import NotAvoiding132, NotAvoiding231, NotAvoiding312
from .permutations import (
    Permutation,
    avoids,
    descent_data,
    inverse,
    reconstruct_231,
    reverse,
)


def phi(p: Permutation, check: bool = True) -> DyckPath:
    """Map a 231-avoider to the Dyck path with valleys (Des, iDes).

    >>> str(phi(Permutation((6, 2, 1, 5, 4, 3))))
    '010010110101'
    """
    if check and not avoids(p, (2, 3, 1)):
        raise NotAvoiding231(p.word)
    d = descent_data(p)
    return from_valleys(
        ValleySet(n=p.n, xs=tuple(sorted(d.des)), ys=tuple(sorted(d.ides)))
    )


def phi_inv(D: DyckPath) -> Permutation:
    """Inverse of ``phi``: rebuild the 231-avoider from the valley sets.

    Total on Dyck paths: valley sets always satisfy the elementwise
    condition that makes the reconstruction succeed.
    """
    v = valleys(D)
    return reconstruct_231(D.n, v.xs, v.ys)


def psi_perm(p: Permutation, check: bool = True) -> Permutation:
    """The involution on 231-avoiders complementing both descent sets:
    the image has Des = {1..n-1} minus iDes(p) and iDes = {1..n-1} minus Des(p).

    Sends (des, maj, imaj) to (n-1-des, C(n,2)-imaj, C(n,2)-maj).
    """
    if check and not avoids(p, (2, 3, 1)):
        raise NotAvoiding231(p.word)
    d = descent_data(p)
    full = set(range(1, p.n))
    return reconstruct_231(p.n, full - d.ides, full - d.des)


def heights(p: Permutation) -> tuple[int, ...]:
    """h_i = number of later positions carrying a larger value.

    >>> heights(Permutation((3, 4, 5, 1, 2, 6)))
    (3, 2, 1, 2, 1, 0)
    """
    w = p.word
    n = p.n
    return tuple(sum(1 for j in range(i + 1, n) if w[j] > w[i]) for i in range(n))


def kappa(p: Permutation, check: bool = True) -> DyckPath:
    """Height-profile bijection from 132-avoiders to Dyck paths.

    Reading the word left to right, adjoin the north steps needed to reach
    height h_i + 1, then one east step down to height h_i.  The input avoids
    132 exactly when consecutive heights satisfy h[i+1] >= h[i] - 1, which is
    what makes the construction valid; violations raise NotAvoiding132.
    """
    hs = heights(p)
    if check and any(b < a - 1 for a, b in zip(hs, hs[1:])):
        raise NotAvoiding132(p.word)
    steps: list[int] = []
    height = 0
    for h in hs:
        climb = h + 1 - height
        assert climb >= 0, "unchecked non-132-avoider"
        steps.extend([0] * climb)
        steps.append(1)
        height = h
    return DyckPath(tuple(steps))


def kappa_factored(p: Permutation, check: bool = True) -> DyckPath:
    """``kappa`` computed through the factorization
    reflect o valley_complement o phi o reverse; agrees with ``kappa``
    on every 132-avoider.
    """
    if check and not avoids(p, (1, 3, 2)):
        raise NotAvoiding132(p.word)
    return reflect(valley_complement(phi(reverse(p), check=False)))


def beta(p: Permutation, check: bool = True) -> DyckPath:
    """valley_complement o phi o inverse, defined on 312-avoiders (whose
    inverses avoid 231).  Carries the inversion number to the area statistic:
    area(beta(p)) = inv(p).
    """
    if check and not avoids(p, (3, 1, 2)):
        raise NotAvoiding312(p.word)
    return valley_complement(phi(inverse(p), check=False))


def trio_132_213(p: Permutation, check: bool = True) -> Permutation:
    """Bijection S_n(132) -> S_n(213) given by reverse, then psi_perm, then
    inverse, then reverse; sends (des, maj, imaj) to
    (n-1-des, C(n,2)-maj, C(n,2)-imaj).
    """
    if check and not avoids(p, (1, 3, 2)):
        raise NotAvoiding132(p.word)
    return reverse(inverse(psi_perm(reverse(p), check=False)))
