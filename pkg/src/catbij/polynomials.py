"""Exact sparse polynomials in a, q, t and the package's polynomial zoo.

``MultiPoly`` stores nonzero integer coefficients keyed by exponent triples
(e_a, e_q, e_t); all arithmetic is exact.  On top of it:

- ``a_poly``            -- sum over 231-avoiders of q^maj t^(C(n,2)-imaj),
                           with an independent Dyck-path route
                           (``a_poly_via_paths``) that must agree,
- ``cat_qt``            -- sum over Dyck paths of q^area t^bounce,
- ``macmahon_q_catalan``-- sum over Dyck paths of q^maj, with an independent
                           quotient route via the q-binomial coefficient,
- ``tristat_gf``        -- a^des q^maj t^imaj over a pattern class, plainly
                           or complemented,
- ``verify_gf_identity``-- truncated-series residuals of the expansion of 1
                           into the bistatistic summands,
- ``kd_search``         -- nonnegative per-path shifts matching the
                           (maj1, C(n,2)-maj0) bistatistic onto cat_qt.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Iterable, Mapping

import json

from .dyck import DyckPath, area, bounce, enumerate_dyck, path_stats
from .errors import NegativeExponent, NoAssignment
from .permutations import (
    DEFAULT_MAX_N,
    enumerate_avoiders,
    inverse,
    perm_stats,
)

Exponents = tuple[int, int, int]  # (e_a, e_q, e_t)


class MultiPoly:
    """Sparse polynomial in a, q, t with exact integer coefficients.

    Immutable; zero coefficients are never stored; equality, hashing and
    printing use the canonical descending-lex term order on (e_a, e_q, e_t).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Exponents, int] | None = None):
        clean: dict[Exponents, int] = {}
        if terms:
            for key, coef in terms.items():
                ea, eq, et = key
                if ea < 0 or eq < 0 or et < 0:
                    raise NegativeExponent(f"exponents must be nonnegative: {key}")
                if coef:
                    clean[(ea, eq, et)] = coef
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls()

    @classmethod
    def one(cls) -> "MultiPoly":
        return cls({(0, 0, 0): 1})

    @classmethod
    def term(cls, coef: int, a: int = 0, q: int = 0, t: int = 0) -> "MultiPoly":
        return cls({(a, q, t): coef})

    # -- inspection ---------------------------------------------------

    def terms(self) -> tuple[tuple[Exponents, int], ...]:
        """Terms in canonical order: descending lex on (e_a, e_q, e_t)."""
        return tuple(sorted(self._terms.items(), reverse=True))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, a: int = 0, q: int = 0, t: int = 0) -> int:
        return self._terms.get((a, q, t), 0)

    def evaluate(self, a: int = 1, q: int = 1, t: int = 1) -> int:
        return sum(
            c * a**ea * q**eq * t**et for (ea, eq, et), c in self._terms.items()
        )

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out = dict(self._terms)
        for key, coef in other._terms.items():
            out[key] = out.get(key, 0) + coef
        return MultiPoly(out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return MultiPoly({k: other * c for k, c in self._terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out: dict[Exponents, int] = {}
        for (a1, q1, t1), c1 in self._terms.items():
            for (a2, q2, t2), c2 in other._terms.items():
                key = (a1 + a2, q1 + q2, t1 + t2)
                out[key] = out.get(key, 0) + c1 * c2
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "MultiPoly":
        if power < 0:
            raise ValueError("negative powers are not defined")
        result = MultiPoly.one()
        for _ in range(power):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self.terms())

    # -- text and JSON forms -------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for (ea, eq, et), coef in self.terms():
            names = []
            for name, e in (("a", ea), ("q", eq), ("t", et)):
                if e == 1:
                    names.append(name)
                elif e > 1:
                    names.append(f"{name}^{e}")
            body = "*".join(names)
            mag = abs(coef)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            sign = "-" if coef < 0 else "+"
            pieces.append((sign, text))
        first_sign, first_text = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_text
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

    def to_json(self) -> str:
        return json.dumps(
            {
                "terms": [
                    {"a": ea, "q": eq, "t": et, "coef": c}
                    for (ea, eq, et), c in self.terms()
                ]
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "MultiPoly":
        data = json.loads(text)
        return cls(
            {(t["a"], t["q"], t["t"]): t["coef"] for t in data["terms"]}
        )


#: The three variables, for building polynomials in code and tests.
A = MultiPoly.term(1, a=1)
Q = MultiPoly.term(1, q=1)
T = MultiPoly.term(1, t=1)


# ---------------------------------------------------------------------------
# q-analogs
# ---------------------------------------------------------------------------

def q_int(k: int) -> MultiPoly:
    """[k]_q = 1 + q + ... + q^(k-1)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return MultiPoly({(0, e, 0): 1 for e in range(k)})


def q_binomial(k: int, l: int) -> MultiPoly:
    """Gaussian binomial coefficient via the Pascal recurrence
    [k, l] = [k-1, l-1] + q^l [k-1, l]; no rational arithmetic involved.

    >>> str(q_binomial(4, 2))
    'q^4 + q^3 + 2*q^2 + q + 1'
    """
    if not 0 <= l <= k:
        raise ValueError(f"need 0 <= l <= k, got k={k}, l={l}")
    row = [MultiPoly.one()]  # row for k' = 0
    for kk in range(1, k + 1):
        new = [MultiPoly.one()]
        for ll in range(1, kk):
            shifted = MultiPoly.term(1, q=ll) * row[ll] if ll < len(row) else MultiPoly.zero()
            new.append(row[ll - 1] + shifted)
        new.append(MultiPoly.one())
        row = new
    return row[l]


def _exact_div_q(numerator: MultiPoly, denominator: MultiPoly) -> MultiPoly:
    """Exact division of polynomials in q alone; raises ArithmeticError if
    the division leaves a remainder or needs non-integer coefficients."""

    def dense(p: MultiPoly) -> list[int]:
        coeffs: dict[int, int] = {}
        for (ea, eq, et), c in p.terms():
            if ea or et:
                raise ArithmeticError("operands must be polynomials in q alone")
            coeffs[eq] = c
        deg = max(coeffs, default=0)
        return [coeffs.get(e, 0) for e in range(deg + 1)]

    num = dense(numerator)
    den = dense(denominator)
    while den and den[-1] == 0:
        den.pop()
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    quot = [0] * (len(num) - len(den) + 1)
    for top in range(len(num) - 1, len(den) - 2, -1):
        pos = top - len(den) + 1
        coef, rem = divmod(num[top], den[-1])
        if rem:
            raise ArithmeticError("inexact coefficient in polynomial division")
        quot[pos] = coef
        for i, d in enumerate(den):
            num[pos + i] -= coef * d
    if any(num):
        raise ArithmeticError("polynomial division left a remainder")
    return MultiPoly({(0, e, 0): c for e, c in enumerate(quot) if c})


# ---------------------------------------------------------------------------
# the polynomial zoo
# ---------------------------------------------------------------------------

def a_poly(n: int, max_n: int = DEFAULT_MAX_N) -> MultiPoly:
    """Bistatistic polynomial: sum over 231-avoiders of q^maj t^(C(n,2)-imaj).

    >>> str(a_poly(2))
    'q + t'
    """
    if n == 0:
        return MultiPoly.one()
    shift = comb(n, 2)
    out: dict[Exponents, int] = {}
    for p in enumerate_avoiders(n, (2, 3, 1), max_n=max_n):
        s = perm_stats(p)
        key = (0, s.maj, shift - s.imaj)
        out[key] = out.get(key, 0) + 1
    return MultiPoly(out)


def a_poly_via_paths(n: int, max_n: int = DEFAULT_MAX_N) -> MultiPoly:
    """Independent route to ``a_poly``: sum over Dyck paths of
    q^maj1 t^(C(n,2)-maj0)."""
    if n == 0:
        return MultiPoly.one()
    shift = comb(n, 2)
    out: dict[Exponents, int] = {}
    for D in enumerate_dyck(n, max_n=max_n):
        s = path_stats(D)
        key = (0, s.maj1, shift - s.maj0)
        out[key] = out.get(key, 0) + 1
    return MultiPoly(out)


def cat_qt(n: int, max_n: int = DEFAULT_MAX_N) -> MultiPoly:
    """q,t-Catalan polynomial: sum over Dyck paths of q^area t^bounce."""
    out: dict[Exponents, int] = {}
    for D in enumerate_dyck(n, max_n=max_n):
        key = (0, area(D), bounce(D))
        out[key] = out.get(key, 0) + 1
    return MultiPoly(out)


def macmahon_q_catalan(n: int, max_n: int = DEFAULT_MAX_N) -> MultiPoly:
    """Major-index q-Catalan: sum over Dyck paths of q^maj."""
    out: dict[Exponents, int] = {}
    for D in enumerate_dyck(n, max_n=max_n):
        key = (0, path_stats(D).maj, 0)
        out[key] = out.get(key, 0) + 1
    return MultiPoly(out)


def macmahon_q_catalan_quotient(n: int) -> MultiPoly:
    """Independent route: q_binomial(2n, n) / [n+1]_q by exact division.

    An inexact division here signals an implementation bug and raises
    ArithmeticError.
    """
    return _exact_div_q(q_binomial(2 * n, n), q_int(n + 1))


_PATTERNS = {
    231: (2, 3, 1),
    312: (3, 1, 2),
    132: (1, 3, 2),
    213: (2, 1, 3),
    123: (1, 2, 3),
    321: (3, 2, 1),
}


def tristat_gf(
    n: int,
    pattern: int,
    orientation: str = "plain",
    max_n: int = DEFAULT_MAX_N,
) -> MultiPoly:
    """Generating function of (des, maj, imaj) over a pattern class.

    plain:        sum of a^des q^maj t^imaj
    complemented: sum of a^(n-1-des) q^(C(n,2)-maj) t^(C(n,2)-imaj)
    """
    try:
        pat = _PATTERNS[pattern]
    except KeyError:
        raise ValueError(f"pattern must be one of {sorted(_PATTERNS)}") from None
    if orientation not in ("plain", "complemented"):
        raise ValueError(f"unknown orientation {orientation!r}")
    shift = comb(n, 2)
    out: dict[Exponents, int] = {}
    for p in enumerate_avoiders(n, pat, max_n=max_n):
        s = perm_stats(p)
        if orientation == "plain":
            key = (s.des, s.maj, s.imaj)
        else:
            key = (n - 1 - s.des, shift - s.maj, shift - s.imaj)
        out[key] = out.get(key, 0) + 1
    return MultiPoly(out)


def qt_swap(p: MultiPoly) -> MultiPoly:
    """Exchange the q- and t-exponents of every term."""
    return MultiPoly({(ea, et, eq): c for (ea, eq, et), c in p.terms()})


def t_to_q_inverse_shifted(p: MultiPoly, n: int) -> MultiPoly:
    """q^C(n,2) * p(q, q^(-1)) as an honest polynomial: each term moves its
    t-exponent onto q as e_q + C(n,2) - e_t.  Raises NegativeExponent when
    the shift is insufficient."""
    shift = comb(n, 2)
    out: dict[Exponents, int] = {}
    for (ea, eq, et), c in p.terms():
        e = eq + shift - et
        if e < 0:
            raise NegativeExponent(
                f"term with exponents (a={ea}, q={eq}, t={et}) needs shift {et - eq}"
                f" > C({n},2) = {shift}"
            )
        key = (ea, e, 0)
        out[key] = out.get(key, 0) + c
    return MultiPoly(out)


# ---------------------------------------------------------------------------
# truncated series and the expansion-of-1 identity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TruncatedSeries:
    """Power series in z with MultiPoly coefficients, truncated at z^order."""

    order: int
    coeffs: tuple[MultiPoly, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"need {self.order + 1} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def monomial(cls, poly: MultiPoly, power: int, order: int) -> "TruncatedSeries":
        """The series poly * z^power (zero if power exceeds the order)."""
        coeffs = [MultiPoly.zero()] * (order + 1)
        if 0 <= power <= order:
            coeffs[power] = poly
        return cls(order, tuple(coeffs))

    @classmethod
    def geometric(cls, factor: MultiPoly, order: int) -> "TruncatedSeries":
        """1 / (1 + factor * z) = sum of (-factor)^m z^m."""
        coeffs = [MultiPoly.one()]
        for _ in range(order):
            coeffs.append(-(coeffs[-1] * factor))
        return cls(order, tuple(coeffs))

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if self.order != other.order:
            raise ValueError("series orders differ")
        return TruncatedSeries(
            self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if self.order != other.order:
            raise ValueError("series orders differ")
        out = [MultiPoly.zero()] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(self.order, tuple(out))


def verify_gf_identity(
    N: int,
    numerator: Callable[[int], MultiPoly] | None = None,
    max_n: int = DEFAULT_MAX_N,
) -> list[MultiPoly]:
    """Residuals, per order of z, of the expansion of 1 into bistatistic
    summands:

        sum_{m >= 0} numerator(m+1) z^m / prod_{i=1..m+1} (1+q^i z)(1+t^i z)

    truncated at z^N, minus 1.  With the default numerator (a_poly) every
    residual is the zero polynomial; the return value lists them for orders
    0..N.

    Note the index offset: the m-th summand carries numerator(m+1), paired
    with denominator exponents up to m+1.
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    if numerator is None:
        numerator = lambda m: a_poly(m, max_n=max_n)
    total = TruncatedSeries.monomial(MultiPoly.zero(), 0, N)
    for m in range(N + 1):
        term = TruncatedSeries.monomial(numerator(m + 1), m, N)
        for i in range(1, m + 2):
            term = term * TruncatedSeries.geometric(MultiPoly.term(1, q=i), N)
            term = term * TruncatedSeries.geometric(MultiPoly.term(1, t=i), N)
        total = total + term
    residuals = list(total.coeffs)
    residuals[0] = residuals[0] - MultiPoly.one()
    return residuals


# ---------------------------------------------------------------------------
# shift-assignment search (bistatistic onto cat_qt)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class KdResult:
    """Outcome of ``kd_search``: each assignment maps every Dyck path of
    semilength n to a nonnegative shift k so that the multiset of
    (maj1 - k, C(n,2) - maj0 - k) pairs equals the monomials of cat_qt(n).
    ``exhaustive`` tells whether ``assignments`` is the complete set."""

    n: int
    assignments: tuple[dict[DyckPath, int], ...]
    exhaustive: bool

    def to_json(self) -> str:
        """Assignments as JSON objects mapping path word to shift."""
        return json.dumps(
            {
                "n": self.n,
                "exhaustive": self.exhaustive,
                "assignments": [
                    {str(D): k for D, k in sorted(a.items(), key=lambda x: str(x[0]))}
                    for a in self.assignments
                ],
            }
        )


def _compatibility(n: int, max_n: int):
    """Paths, their compatible target monomials with forced shifts, and the
    target multiplicities."""
    shift = comb(n, 2)
    target: dict[tuple[int, int], int] = {}
    for (_, eq, et), c in cat_qt(n, max_n=max_n).terms():
        target[(eq, et)] = c
    paths = sorted(enumerate_dyck(n, max_n=max_n), key=str)
    options: dict[DyckPath, list[tuple[tuple[int, int], int]]] = {}
    for D in paths:
        s = path_stats(D)
        opts = []
        for (alpha, beta) in sorted(target):
            k = s.maj1 - alpha
            if k >= 0 and shift - s.maj0 - beta == k:
                opts.append(((alpha, beta), k))
        if not opts:
            raise NoAssignment(f"path {D} matches no target monomial at n={n}")
        options[D] = opts
    return paths, options, target


def _all_assignments(paths, options, capacity):
    """Backtracking over capacitated choices, most-constrained path first."""
    order = sorted(paths, key=lambda D: (len(options[D]), str(D)))
    chosen: dict[DyckPath, int] = {}

    def walk(i):
        if i == len(order):
            yield dict(chosen)
            return
        D = order[i]
        for mono, k in options[D]:
            if capacity[mono] > 0:
                capacity[mono] -= 1
                chosen[D] = k
                yield from walk(i + 1)
                capacity[mono] += 1
        chosen.pop(D, None)

    yield from walk(0)


def _one_assignment(paths, options, capacity):
    """Augmenting-path matching of paths onto capacitated monomials."""
    holders: dict[tuple[int, int], list[DyckPath]] = {m: [] for m in capacity}
    where: dict[DyckPath, tuple[tuple[int, int], int]] = {}

    def try_place(D, visited) -> bool:
        for mono, k in options[D]:
            if mono in visited:
                continue
            visited.add(mono)
            if len(holders[mono]) < capacity[mono]:
                holders[mono].append(D)
                where[D] = (mono, k)
                return True
            for other in list(holders[mono]):
                if try_place(other, visited):
                    holders[mono].remove(other)
                    holders[mono].append(D)
                    where[D] = (mono, k)
                    return True
        return False

    for D in sorted(paths, key=lambda D: (len(options[D]), str(D))):
        if not try_place(D, set()):
            raise NoAssignment(f"no perfect matching extends through path {D}")
    return {D: k for D, (mono, k) in where.items()}


def kd_search(
    n: int,
    all_assignments: bool | None = None,
    max_n: int = DEFAULT_MAX_N,
) -> KdResult:
    """Find nonnegative shifts k_D aligning the (maj1, C(n,2)-maj0) pairs of
    all Dyck paths with the monomial multiset of cat_qt(n).

    A path is compatible with a target monomial (alpha, beta) exactly when
    maj1 - alpha = C(n,2) - maj0 - beta >= 0, which forces its shift; the
    search is then a perfect matching onto monomials with multiplicity.

    By default the complete assignment set is enumerated for n <= 5 and a
    single assignment is reported above that (``exhaustive`` says which).
    Raises NoAssignment when no assignment exists.
    """
    if all_assignments is None:
        all_assignments = n <= 5
    paths, options, target = _compatibility(n, max_n)
    if all_assignments:
        found = list(_all_assignments(paths, options, dict(target)))
        if not found:
            raise NoAssignment(f"no shift assignment exists at n={n}")
        found.sort(key=lambda a: tuple(a[D] for D in paths))
        return KdResult(n=n, assignments=tuple(found), exhaustive=True)
    single = _one_assignment(paths, options, dict(target))
    return KdResult(n=n, assignments=(single,), exhaustive=False)
