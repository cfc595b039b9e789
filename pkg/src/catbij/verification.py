"""Named check suites over exhaustively enumerated objects.

Each suite function returns a list of ``Check`` results; a check fails with
the smallest counterexample found (enumeration is ascending in n, lex within
each n).  The CLI's ``verify`` command prints them as a PASS/FAIL table, and
the acceptance tests assert on them directly.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Callable, Iterator

from . import bijections, dyck, permutations, polynomials, tableaux
from .permutations import DEFAULT_MAX_N, Permutation


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


def _scan(name: str, counterexamples: Iterator[str], note: str = "") -> Check:
    """Materialize a check from a stream of counterexample descriptions."""
    first = next(counterexamples, None)
    if first is None:
        return Check(name=name, passed=True, detail=note)
    return Check(name=name, passed=False, detail=f"counterexample: {first}")


def _catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def _avoiders(n: int, pattern, max_n: int):
    return permutations.enumerate_avoiders(n, pattern, max_n=max_n)


# ---------------------------------------------------------------------------
# phi
# ---------------------------------------------------------------------------

def suite_phi(n_max: int = 9, max_n: int = DEFAULT_MAX_N) -> list[Check]:
    def bijectivity() -> Iterator[str]:
        for n in range(1, n_max + 1):
            images = set()
            count = 0
            for p in _avoiders(n, (2, 3, 1), max_n):
                D = bijections.phi(p, check=False)
                count += 1
                images.add(D)
                if bijections.phi_inv(D) != p:
                    yield f"round-trip fails at {p}"
                    return
            if count != _catalan(n) or len(images) != _catalan(n):
                yield f"n={n}: {count} avoiders, {len(images)} images, want {_catalan(n)}"
                return
            for D in dyck.enumerate_dyck(n, max_n=max_n):
                if bijections.phi(bijections.phi_inv(D), check=False) != D:
                    yield f"path round-trip fails at {D}"
                    return

    def maj_additive() -> Iterator[str]:
        for n in range(1, n_max + 1):
            for p in _avoiders(n, (2, 3, 1), max_n):
                s = permutations.perm_stats(p)
                if dyck.path_stats(bijections.phi(p, check=False)).maj != s.maj + s.imaj:
                    yield str(p)
                    return

    def valley_transport() -> Iterator[str]:
        for n in range(1, n_max + 1):
            for p in _avoiders(n, (2, 3, 1), max_n):
                d = permutations.descent_data(p)
                v = dyck.valleys(bijections.phi(p, check=False))
                if set(v.xs) != d.des or set(v.ys) != d.ides:
                    yield str(p)
                    return

    def split_transport() -> Iterator[str]:
        for n in range(1, n_max + 1):
            for p in _avoiders(n, (2, 3, 1), max_n):
                s = permutations.perm_stats(p)
                ps = dyck.path_stats(bijections.phi(p, check=False))
                if ps.maj1 != s.maj or ps.maj0 != s.imaj:
                    yield str(p)
                    return

    return [
        _scan(f"phi bijects 231-avoiders onto Dyck paths, n<={n_max}", bijectivity()),
        _scan(f"maj(phi(w)) = maj(w) + imaj(w), n<={n_max}", maj_additive()),
        _scan(f"valley sets of phi(w) are (Des, iDes), n<={n_max}", valley_transport()),
        _scan(f"(maj1, maj0) of phi(w) is (maj, imaj), n<={n_max}", split_transport()),
    ]


# ---------------------------------------------------------------------------
# descent-geometry lemmas on 231-avoiders
# ---------------------------------------------------------------------------

def suite_lemmas(n_max: int = 8, max_n: int = DEFAULT_MAX_N) -> list[Check]:
    def ides_from_values() -> Iterator[str]:
        for n in range(1, n_max + 1):
            for p in _avoiders(n, (2, 3, 1), max_n):
                d = permutations.descent_data(p)
                if d.ides != {p.word[i - 1] - 1 for i in d.des}:
                    yield str(p)
                    return

    def des_counts_match_inverse() -> Iterator[str]:
        for pattern in ((1, 3, 2), (2, 3, 1), (3, 1, 2), (2, 1, 3)):
            for n in range(1, n_max + 1):
                for p in _avoiders(n, pattern, max_n):
                    d = permutations.descent_data(p)
                    if len(d.des) != len(d.ides):
                        yield f"{p} avoiding {pattern}"
                        return

    def witness_123() -> Iterator[str]:
        w = Permutation((2, 4, 1, 3))
        d = permutations.descent_data(w)
        ok = (
            permutations.avoids(w, (1, 2, 3))
            and d.des == {2}
            and d.ides == {1, 3}
        )
        if not ok:
            yield f"witness broke: Des={sorted(d.des)}, iDes={sorted(d.ides)}"

    def ascents_bound_tail() -> Iterator[str]:
        for n in range(1, n_max + 1):
            for p in _avoiders(n, (2, 3, 1), max_n):
                d = permutations.descent_data(p)
                for j in d.asc:
                    if any(p.word[k - 1] < p.word[j - 1] for k in range(j + 1, n + 1)):
                        yield f"{p}, ascent {j}"
                        return

    def ascent_inequality() -> Iterator[str]:
        for n in range(1, n_max + 1):
            for p in _avoiders(n, (2, 3, 1), max_n):
                for j in permutations.descent_data(p).asc:
                    if j < p.word[j - 1] + permutations.descent_run_before(p, j):
                        yield f"{p}, ascent {j}"
                        return

    def consecutive_ascents() -> Iterator[str]:
        for n in range(1, n_max + 1):
            for p in _avoiders(n, (2, 3, 1), max_n):
                asc = sorted(permutations.descent_data(p).asc)
                for a, b in zip(asc, asc[1:]):
                    if a < p.word[b - 1] - 1:
                        yield f"{p}, ascents {a},{b}"
                        return

    def elementwise() -> Iterator[str]:
        for n in range(1, n_max + 1):
            for p in _avoiders(n, (2, 3, 1), max_n):
                d = permutations.descent_data(p)
                if any(i > j for i, j in zip(sorted(d.des), sorted(d.ides))):
                    yield str(p)
                    return

    def reconstruct_roundtrip() -> Iterator[str]:
        for n in range(1, n_max + 1):
            for p in _avoiders(n, (2, 3, 1), max_n):
                d = permutations.descent_data(p)
                if permutations.reconstruct_231(n, d.des, d.ides) != p:
                    yield str(p)
                    return

    return [
        _scan(f"iDes = {{w_i - 1 : i in Des}} on 231-avoiders, n<={n_max}", ides_from_values()),
        _scan(f"|Des| = |iDes| on 132/231/312/213-avoiders, n<={n_max}", des_counts_match_inverse()),
        _scan("witness [2,4,1,3]: 123-avoiding, |Des|=1 but |iDes|=2", witness_123()),
        _scan(f"values after an ascent exceed it (231), n<={n_max}", ascents_bound_tail()),
        _scan(f"j >= w_j + run-before-j at ascents (231), n<={n_max}", ascent_inequality()),
        _scan(f"consecutive ascents: j_l >= w(j_l+1) - 1 (231), n<={n_max}", consecutive_ascents()),
        _scan(f"sorted Des <= iDes elementwise (231), n<={n_max}", elementwise()),
        _scan(f"reconstruct_231 round-trips descent data, n<={n_max}", reconstruct_roundtrip()),
    ]


# ---------------------------------------------------------------------------
# kappa and its factorization
# ---------------------------------------------------------------------------

def suite_kappa(n_max: int = 8, max_n: int = DEFAULT_MAX_N) -> list[Check]:
    heights_bar = min(n_max, 7)  # these two range over all of S_n

    def factorization() -> Iterator[str]:
        for n in range(1, n_max + 1):
            for p in _avoiders(n, (1, 3, 2), max_n):
                if bijections.kappa(p, check=False) != bijections.kappa_factored(p, check=False):
                    yield str(p)
                    return

    def set_x() -> Iterator[str]:
        for n in range(1, n_max + 1):
            for p in _avoiders(n, (1, 3, 2), max_n):
                v = dyck.valleys(bijections.kappa(p, check=False))
                if set(v.xs) != permutations.descent_data(p).des:
                    yield str(p)
                    return

    def set_y() -> Iterator[str]:
        for n in range(1, n_max + 1):
            for p in _avoiders(n, (1, 3, 2), max_n):
                v = dyck.valleys(bijections.kappa(p, check=False))
                want = {n - j for j in permutations.descent_data(p).ides}
                if set(v.ys) != want:
                    yield str(p)
                    return

    def ides_from_heights() -> Iterator[str]:
        for n in range(1, n_max + 1):
            for p in _avoiders(n, (1, 3, 2), max_n):
                hs = bijections.heights(p)
                d = permutations.descent_data(p)
                if d.ides != {n - i - hs[i - 1] for i in d.des}:
                    yield str(p)
                    return

    def height_drop_is_ascent() -> Iterator[str]:
        for n in range(1, heights_bar + 1):
            for word in itertools.permutations(range(1, n + 1)):
                p = Permutation(word)
                hs = bijections.heights(p)
                asc = permutations.descent_data(p).asc
                for i in range(1, n):
                    if (hs[i] < hs[i - 1]) != (i in asc):
                        yield f"{p}, position {i}"
                        return

    def height_criterion() -> Iterator[str]:
        for n in range(1, heights_bar + 1):
            for word in itertools.permutations(range(1, n + 1)):
                p = Permutation(word)
                hs = bijections.heights(p)
                crit = all(b >= a - 1 for a, b in zip(hs, hs[1:]))
                if crit != permutations.avoids(p, (1, 3, 2)):
                    yield str(p)
                    return

    return [
        _scan(f"kappa equals reflect o complement o phi o reverse, n<={n_max}", factorization()),
        _scan(f"Set_X(kappa(w)) = Des(w) on 132-avoiders, n<={n_max}", set_x()),
        _scan(f"Set_Y(kappa(w)) = {{n-j : j in iDes}} on 132-avoiders, n<={n_max}", set_y()),
        _scan(f"iDes = {{n-i-h_i : i in Des}} on 132-avoiders, n<={n_max}", ides_from_heights()),
        _scan(f"h drops exactly at ascents, all permutations, n<={heights_bar}", height_drop_is_ascent()),
        _scan(f"132-avoidance iff h_(i+1) >= h_i - 1, all permutations, n<={heights_bar}", height_criterion()),
    ]


# ---------------------------------------------------------------------------
# inversion number vs area
# ---------------------------------------------------------------------------

def suite_inv_area(n_max: int = 8, max_n: int = DEFAULT_MAX_N) -> list[Check]:
    def bridge() -> Iterator[str]:
        for n in range(1, n_max + 1):
            for p in _avoiders(n, (2, 3, 1), max_n):
                image = dyck.valley_complement(bijections.phi(p, check=False))
                if dyck.area(image) != permutations.perm_stats(p).inv:
                    yield str(p)
                    return

    def beta_carries_inv() -> Iterator[str]:
        for n in range(1, n_max + 1):
            for p in _avoiders(n, (3, 1, 2), max_n):
                if dyck.area(bijections.beta(p, check=False)) != permutations.perm_stats(p).inv:
                    yield str(p)
                    return

    return [
        _scan(f"inv(w) = area(complement(phi(w))) on 231-avoiders, n<={n_max}", bridge()),
        _scan(f"area(beta(w)) = inv(w) on 312-avoiders, n<={n_max}", beta_carries_inv()),
    ]


# ---------------------------------------------------------------------------
# polynomial symmetry and specializations
# ---------------------------------------------------------------------------

def suite_symmetry(n_max: int = 8, max_n: int = DEFAULT_MAX_N) -> list[Check]:
    def a_symmetric() -> Iterator[str]:
        for n in range(1, n_max + 1):
            p = polynomials.a_poly(n, max_n=max_n)
            if polynomials.qt_swap(p) != p:
                yield f"n={n}"
                return

    def cat_symmetric() -> Iterator[str]:
        for n in range(1, n_max + 1):
            p = polynomials.cat_qt(n, max_n=max_n)
            if polynomials.qt_swap(p) != p:
                yield f"n={n}"
                return

    def routes_agree() -> Iterator[str]:
        for n in range(1, n_max + 1):
            if polynomials.a_poly(n, max_n=max_n) != polynomials.a_poly_via_paths(n, max_n=max_n):
                yield f"n={n}"
                return

    def specializations() -> Iterator[str]:
        for n in range(1, n_max + 1):
            mac = polynomials.macmahon_q_catalan(n, max_n=max_n)
            quot = polynomials.macmahon_q_catalan_quotient(n)
            a_shift = polynomials.t_to_q_inverse_shifted(polynomials.a_poly(n, max_n=max_n), n)
            cat_shift = polynomials.t_to_q_inverse_shifted(polynomials.cat_qt(n, max_n=max_n), n)
            if not (mac == quot == a_shift == cat_shift):
                yield f"n={n}"
                return

    def counts() -> Iterator[str]:
        for n in range(1, n_max + 1):
            if polynomials.cat_qt(n, max_n=max_n).evaluate() != _catalan(n):
                yield f"n={n}"
                return

    return [
        _scan(f"A_n(q,t) = A_n(t,q), n<={n_max}", a_symmetric()),
        _scan(f"Cat_n(q,t) = Cat_n(t,q), n<={n_max}", cat_symmetric()),
        _scan(f"permutation and path routes to A_n agree, n<={n_max}", routes_agree()),
        _scan(
            f"q^C(n,2) A_n(q,1/q) = maj q-Catalan = binomial quotient = "
            f"q^C(n,2) Cat_n(q,1/q), n<={n_max}",
            specializations(),
        ),
        _scan(f"Cat_n(1,1) is the Catalan number, n<={n_max}", counts()),
    ]


# ---------------------------------------------------------------------------
# generating-function identity
# ---------------------------------------------------------------------------

def suite_gf(n_max: int = 6, max_n: int = DEFAULT_MAX_N) -> list[Check]:
    def residuals() -> Iterator[str]:
        res = polynomials.verify_gf_identity(n_max, max_n=max_n)
        for order, poly in enumerate(res):
            if not poly.is_zero:
                yield f"order {order}: {poly}"
                return

    return [_scan(f"expansion-of-1 residuals vanish through z^{n_max}", residuals())]


# ---------------------------------------------------------------------------
# tristatistic identities
# ---------------------------------------------------------------------------

def _drop_a(p: polynomials.MultiPoly) -> polynomials.MultiPoly:
    """Specialize a = 1 by collapsing the a-exponent."""
    out: dict = {}
    for (ea, eq, et), c in p.terms():
        key = (0, eq, et)
        out[key] = out.get(key, 0) + c
    return polynomials.MultiPoly(out)


def suite_tristat(n_max: int = 7, max_n: int = DEFAULT_MAX_N) -> list[Check]:
    def pair(plain: int, complemented: int) -> Callable[[], Iterator[str]]:
        def run() -> Iterator[str]:
            for n in range(1, n_max + 1):
                lhs = polynomials.tristat_gf(n, plain, "plain", max_n=max_n)
                rhs = polynomials.tristat_gf(n, complemented, "complemented", max_n=max_n)
                if lhs != rhs:
                    yield f"n={n}"
                    return

        return run

    def survives_a_one() -> Iterator[str]:
        for n in range(1, n_max + 1):
            lhs = _drop_a(polynomials.tristat_gf(n, 132, "plain", max_n=max_n))
            rhs = _drop_a(polynomials.tristat_gf(n, 213, "complemented", max_n=max_n))
            if lhs != rhs:
                yield f"n={n}"
                return

    return [
        _scan(f"231-plain equals 312-complemented, n<={n_max}", pair(231, 312)()),
        _scan(f"132-plain equals 213-complemented, n<={n_max}", pair(132, 213)()),
        _scan(f"123-plain equals 321-complemented, n<={n_max}", pair(123, 321)()),
        _scan(f"132/213 identity survives a=1, n<={n_max}", survives_a_one()),
    ]


# ---------------------------------------------------------------------------
# RSK and the evacuation involution
# ---------------------------------------------------------------------------

def suite_rsk_j(n_max: int = 7, max_n: int = DEFAULT_MAX_N) -> list[Check]:
    def all_perms(n: int):
        return (Permutation(w) for w in itertools.permutations(range(1, n + 1)))

    def roundtrip() -> Iterator[str]:
        for n in range(1, n_max + 1):
            for p in all_perms(n):
                P, Q = tableaux.rsk(p)
                if tableaux.inverse_rsk(P, Q) != p:
                    yield str(p)
                    return

    def descent_transport() -> Iterator[str]:
        for n in range(1, n_max + 1):
            for p in all_perms(n):
                P, Q = tableaux.rsk(p)
                d = permutations.descent_data(p)
                if tableaux.tableau_descents(Q) != d.des or tableaux.tableau_descents(P) != d.ides:
                    yield str(p)
                    return

    def avoidance_is_two_rows() -> Iterator[str]:
        for n in range(1, n_max + 1):
            for p in all_perms(n):
                P, _ = tableaux.rsk(p)
                if (len(P.shape) <= 2) != permutations.avoids(p, (3, 2, 1)):
                    yield str(p)
                    return

    def evacuation_props() -> Iterator[str]:
        bar = min(n_max + 1, 8)
        for n in range(1, bar + 1):
            for T in tableaux.standard_tableaux(n):
                image = tableaux.evacuation(T)
                if image.shape != T.shape:
                    yield f"shape changed: {T}"
                    return
                if tableaux.evacuation(image) != T:
                    yield f"not an involution: {T}"
                    return
                want = {n - i for i in tableaux.tableau_descents(T)}
                if tableaux.tableau_descents(image) != want:
                    yield f"descents wrong: {T}"
                    return

    def j_props() -> Iterator[str]:
        for n in range(1, n_max + 1):
            for p in _avoiders(n, (3, 2, 1), max_n):
                image = tableaux.j_involution(p, check=False)
                if not permutations.avoids(image, (3, 2, 1)):
                    yield f"image leaves the class: {p}"
                    return
                if tableaux.j_involution(image, check=False) != p:
                    yield f"not an involution: {p}"
                    return
                d, di = permutations.descent_data(p), permutations.descent_data(image)
                if di.des != d.des or di.ides != {n - j for j in d.ides}:
                    yield f"descent transport wrong: {p}"
                    return

    return [
        _scan(f"inverse RSK round-trips all permutations, n<={n_max}", roundtrip()),
        _scan(f"Des(w)=Des(Q) and iDes(w)=Des(P), n<={n_max}", descent_transport()),
        _scan(f"321-avoidance iff at most two rows, n<={n_max}", avoidance_is_two_rows()),
        _scan("evacuation: involution, shape, descent complement (tableaux)", evacuation_props()),
        _scan(f"j: involution on 321-avoiders fixing Des, reversing iDes, n<={n_max}", j_props()),
    ]


# ---------------------------------------------------------------------------
# shift assignments
# ---------------------------------------------------------------------------

def suite_kd(n_max: int = 8, max_n: int = DEFAULT_MAX_N) -> list[Check]:
    checks: list[Check] = []

    def exists() -> Iterator[str]:
        for n in range(1, n_max + 1):
            try:
                polynomials.kd_search(n, all_assignments=False, max_n=max_n)
            except polynomials.NoAssignment as exc:
                yield f"n={n}: {exc}"
                return

    checks.append(_scan(f"a shift assignment exists for every n<={n_max}", exists()))

    if n_max >= 3:
        def unique_zero() -> Iterator[str]:
            result = polynomials.kd_search(3, all_assignments=True, max_n=max_n)
            if len(result.assignments) != 1 or any(result.assignments[0].values()):
                yield f"got {len(result.assignments)} assignments"

        checks.append(_scan("n=3: the all-zero assignment is unique", unique_zero()))

    if n_max >= 4:
        def two_at_four() -> Iterator[str]:
            result = polynomials.kd_search(4, all_assignments=True, max_n=max_n)
            summaries = sorted(
                ",".join(f"{D}:{k}" for D, k in sorted(a.items(), key=lambda x: str(x[0])) if k)
                for a in result.assignments
            )
            if summaries != ["00011101:1", "01010011:1"]:
                yield f"got {summaries}"

        checks.append(
            _scan(
                "n=4: exactly two assignments (k=1 on 00011101 or on 01010011)",
                two_at_four(),
                note="k=1 on 00011101, else 0; or k=1 on 01010011, else 0",
            )
        )

        def complement_swaps() -> Iterator[str]:
            a = dyck.parse_path("01010011")
            b = dyck.parse_path("00011101")
            if dyck.valley_complement(a) != b or dyck.valley_complement(b) != a:
                yield "complement does not swap the two special paths"

        checks.append(
            _scan("valley complement swaps 01010011 and 00011101", complement_swaps())
        )

    return checks


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

SUITES: dict[str, tuple[Callable[..., list[Check]], int]] = {
    "phi": (suite_phi, 9),
    "lemmas": (suite_lemmas, 8),
    "kappa-factorization": (suite_kappa, 8),
    "inv-area": (suite_inv_area, 8),
    "symmetry": (suite_symmetry, 8),
    "gf-identity": (suite_gf, 6),
    "tristat": (suite_tristat, 7),
    "rsk-j": (suite_rsk_j, 7),
    "kd": (suite_kd, 8),
}


def run_suite(name: str, n_max: int | None = None, max_n: int = DEFAULT_MAX_N) -> list[Check]:
    """Run one suite (or 'all'); unknown names raise ValueError."""
    if name == "all":
        out: list[Check] = []
        for suite_name in SUITES:
            out.extend(run_suite(suite_name, n_max=n_max, max_n=max_n))
        return out
    try:
        func, default_bar = SUITES[name]
    except KeyError:
        known = ", ".join([*SUITES, "all"])
        raise ValueError(f"unknown suite {name!r}; choose from: {known}") from None
    bar = default_bar if n_max is None else n_max
    return func(bar, max_n=max_n)
