"""Exhaustive verification harness.

Each registered check runs a predicate over every n in 1..maxN and stops at
the first failing n, reporting the lexicographically smallest counterexample
found there.  Module attributes (bij.psi, codes.b_code, ...) are looked up at
call time so fault-injection tests can patch them.
"""
from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Optional

from . import actions, bijections as bij, codes, poly, stats
from .core import check_limit, gen_invseqs, resource_limit
from .errors import MismatchAt, NotSymmetric, UnknownCheck
from .patterns import GAMMA_DOMAIN, PSI_IMAGE, class_members, count_members, is_member

A098746 = (1, 2, 6, 23, 102, 495, 2549, 13682, 75714, 428882)

BUG = "a proven claim failed, which points to an implementation bug"


@dataclass
class CheckResult:
    name: str
    title: str
    n_range: tuple
    status: str
    counterexample: Optional[tuple] = None  # (input, expected, got)
    elapsed: float = 0.0
    detail: str = ""
    failing_n: Optional[int] = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        cx = None
        if self.counterexample is not None:
            inp, exp, got = self.counterexample
            cx = {"input": _jsonable(inp), "expected": _jsonable(exp), "got": _jsonable(got)}
        return {
            "name": self.name,
            "title": self.title,
            "nRange": list(self.n_range),
            "status": self.status,
            "failingN": self.failing_n,
            "counterexample": cx,
            "elapsed": round(self.elapsed, 3),
            "detail": self.detail,
        }


def _jsonable(x):
    if isinstance(x, (tuple, list)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (int, str, bool)) or x is None:
        return x
    return str(x)


@dataclass
class Check:
    name: str
    title: str
    default_max: int
    per_n: Callable[[int], Optional[tuple]]
    # witness checks search at least this far regardless of maxN
    min_search: int = 0


REGISTRY: dict = {}


def register(name: str, title: str, default_max: int, min_search: int = 0):
    def deco(fn):
        REGISTRY[name] = Check(name, title, default_max, fn, min_search)
        return fn

    return deco


def _scan(items, fn) -> Optional[tuple]:
    """First item whose predicate reports (expected, got); errors count as failures."""
    for x in items:
        try:
            r = fn(x)
        except Exception as exc:  # a broken map may raise anywhere
            r = ("no error", f"{type(exc).__name__}: {exc}")
        if r is not None:
            return (x,) + tuple(r)
    return None


def _first_diff(expected: Counter, got: Counter) -> Optional[tuple]:
    keys = sorted(set(expected) | set(got))
    for k in keys:
        if expected.get(k, 0) != got.get(k, 0):
            return (k, expected.get(k, 0), got.get(k, 0))
    return None


def _set_diff(expected: set, got: set) -> Optional[tuple]:
    for k in sorted(expected ^ got):
        return (k, k in expected, k in got)
    return None


def _domain(n: int) -> list:
    return list(class_members(GAMMA_DOMAIN, n))


# -- ascent identities and gamma-positivity ----------------------------------


@register("thm-1.2", "Asc set-distribution of (>=,!=,>) equals that of (>,-,>); alpha keeps Asc", 8)
def _thm_1_2(n):
    r = _first_diff(poly.set_dist(class_members("A", n)), poly.set_dist(class_members("C", n)))
    if r:
        return r
    target = set(class_members("C", n))

    def one(e):
        t = bij.alpha(e)
        if stats.asc_set(t) != stats.asc_set(e):
            return stats.asc_set(e), stats.asc_set(t)
        if t not in target:
            return "image in (>,-,>)", t
        if bij.beta(t) != e:
            return e, bij.beta(t)
        return None

    return _scan(class_members("A", n), one)


@register("thm-1.3", "gamma bijects I_n(100,210,201) onto I_n(101,210,201), complementing asc and keeping Dt", 8)
def _thm_1_3(n):
    seen = {}

    def one(e):
        t = bij.gamma_map(e)
        if not is_member(PSI_IMAGE, t):
            return "image in I_n(101,210,201)", t
        if stats.asc(t) != n - 1 - stats.asc(e):
            return n - 1 - stats.asc(e), stats.asc(t)
        if stats.descent_tops(t) != stats.descent_tops(e):
            return stats.descent_tops(e), stats.descent_tops(t)
        if t in seen:
            return f"injective, {seen[t]} already maps to {t}", t
        seen[t] = e
        return None

    r = _scan(_domain(n), one)
    if r:
        return r
    target = count_members(PSI_IMAGE, n)
    if len(seen) != target:
        return (n, target, len(seen))
    dom = poly.joint_dist(GAMMA_DOMAIN, n).complemented(n)
    return _first_diff(Counter(dom), Counter(poly.joint_dist(PSI_IMAGE, n)))


@register("conj-1.1", "asc polynomial of (>=,!=,>) is the reversal of that of (>,!=,>=)", 8)
def _conj_1_1(n):
    a = poly.dist_poly("A", n)
    b = poly.dist_poly("B", n)
    rev = poly.IntPoly(a[n - 1 - k] for k in range(n))
    if rev != b:
        return (n, rev.to_list(), b.to_list())
    return None


@register("cor-1.4", "Gamma stabilizes (>,-,>=) and (asc, Dt) is symmetric there", 8)
def _cor_1_4(n):
    members = list(class_members("BC", n))
    pool = set(members)

    def one(e):
        b = bij.Gamma_map(e)
        return None if b in pool else ("image in (>,-,>=)", b)

    r = _scan(members, one)
    if r:
        return r
    jd = poly.joint_dist_of(members)
    return _first_diff(Counter(jd), Counter(jd.complemented(n)))


def _gamma_vs_tilde(name, n):
    h = poly.dist_poly(name, n)
    try:
        gam = poly.gamma_extract(h, n - 1)
    except NotSymmetric:
        return (n, "symmetric", h.to_list())
    tilde = stats.tilde_counts(name, n)
    if gam != tilde:
        return (n, tilde, gam)
    if any(g < 0 for g in gam):
        return (n, "nonnegative", gam)
    return None


@register("prop-1.5", "gamma-vector of the asc polynomial on (>,-,>=) equals the no-double-ascent counts", 8)
def _prop_1_5(n):
    return _gamma_vs_tilde("BC", n)


@register("thm-1.6", "gamma-vector of the asc polynomial on (>,!=,>) equals the no-double-ascent counts", 8)
def _thm_1_6(n):
    return _gamma_vs_tilde("T", n)


# -- roles and moves ----------------------------------------------------------


@register("prop-2.2", "va - pk = 1 on every inversion sequence", 8)
def _prop_2_2(n):
    def one(e):
        d = len(stats.valleys(e)) - len(stats.peaks(e))
        return None if d == 1 else (1, d)

    return _scan(gen_invseqs(n), one)


@register("prop-2.3", "Fix, Tr and Tl partition [n] on I_n(100,210,201)", 8)
def _prop_2_3(n):
    def one(e):
        fix, tr, tl = stats.roles(e)
        allpos = list(fix) + list(tr) + list(tl)
        if sorted(allpos) != list(range(1, n + 1)):
            return list(range(1, n + 1)), (fix, tr, tl)
        return None

    return _scan(_domain(n), one)


def predicted_roles(e, step) -> tuple:
    """Roles after one move: everyone keeps their role at a shifted position, the mover flips."""
    fix, tr, tl = stats.roles(e)
    s, j = step.start, step.landing

    def shift(p):
        if s < p <= j:
            return p - 1
        if j <= p < s:
            return p + 1
        return p

    nfix = {shift(p) for p in fix}
    ntr = {shift(p) for p in tr if p != s}
    ntl = {shift(p) for p in tl if p != s}
    (ntl if step.direction == "right" else ntr).add(j)
    return tuple(sorted(nfix)), tuple(sorted(ntr)), tuple(sorted(ntl))


def _single_moves(n, direction):
    for e in _domain(n):
        _, tr, tl = stats.roles(e)
        for i in tr if direction == "right" else tl:
            yield e, i


def _move_bookkeeping(n, direction):
    def one(pair):
        e, i = pair
        eb, trace = bij.move(e, i)
        if not is_member(GAMMA_DOMAIN, eb):
            return "image in I_n(100,210,201)", eb
        want = predicted_roles(e, trace.steps[0])
        got = stats.roles(eb)
        if got != want:
            return want, got
        d0 = len(stats.peaks(e)) - len(stats.special_unfixed(e))
        d1 = len(stats.peaks(eb)) - len(stats.special_unfixed(eb))
        if d0 != d1:
            return d0, d1
        return None

    return _scan(_single_moves(n, direction), one)


@register("prop-2.4", "a single rightward move stays in the class and shifts (Fix, Tr, Tl) as predicted", 8)
def _prop_2_4(n):
    return _move_bookkeeping(n, "right")


@register("prop-2.5", "a single leftward move stays in the class and shifts (Fix, Tr, Tl) as predicted", 8)
def _prop_2_5(n):
    return _move_bookkeeping(n, "left")


@register("lemma-2.7", "single moves of two movable elements commute", 7)
def _lemma_2_7(n):
    def pairs():
        for e in _domain(n):
            fix, tr, tl = stats.roles(e)
            mov = sorted(tr + tl)
            for a in mov:
                for b in mov:
                    if a < b:
                        yield e, a, b

    def one(triple):
        e, a, b = triple
        return None if bij.commute_check(e, a, b) else (True, False)

    return _scan(pairs(), one)


@register("lemma-2.8", "Gamma is an involution sending (Dt, tr, tl, pk-su) to (Dt, tl, tr, pk-su)", 8)
def _lemma_2_8(n):
    def key(e):
        _, tr, tl = stats.roles(e)
        return stats.descent_tops(e), len(tr), len(tl), len(stats.peaks(e)) - len(stats.special_unfixed(e))

    def one(e):
        b = bij.Gamma_map(e)
        if bij.Gamma_map(b) != e:
            return e, bij.Gamma_map(b)
        dt, tr, tl, d = key(e)
        want = (dt, tl, tr, d)
        got = key(b)
        return None if got == want else (want, got)

    return _scan(_domain(n), one)


@register("fact-star", "a leftward mover is never smaller than the element it just passed", 8)
def _fact_star(n):
    def one(e):
        _, trace = bij.Gamma(e)
        for step in trace.steps:
            if step.direction != "left":
                continue
            v = step.value_before
            for x in step.passed:
                v -= 1
                if v < x:
                    return f">= {x}", v
        return None

    return _scan(_domain(n), one)


@register("eq-ascexpand", "asc = tl + va + sf - 1 on I_n(100,210,201)", 8)
def _eq_ascexpand(n):
    def one(e):
        _, _, tl = stats.roles(e)
        rhs = len(tl) + len(stats.valleys(e)) + len(stats.special_fixed(e)) - 1
        return None if stats.asc(e) == rhs else (rhs, stats.asc(e))

    return _scan(_domain(n), one)


# -- permutation codes and actions --------------------------------------------


def _code_image(code, perm_class, target, n):
    perms = list(class_members(perm_class, n))
    images = {}

    def one(p):
        e = code(p)
        if e in images:
            return f"injective, {images[e]} has the same code", e
        images[e] = p
        return None

    r = _scan(perms, one)
    if r:
        return r
    return _set_diff(set(class_members(target, n)), set(images))


@register("prop-3.1", "Lehmer code maps S_n(2134,2143) onto (>,-,>=), sending Des to Asc", 7)
def _prop_3_1(n):
    r = _code_image(codes.lehmer, "S-BC", "BC", n)
    if r:
        return r

    def one(p):
        e = codes.lehmer(p)
        return None if stats.des_set(p) == stats.asc_set(e) else (stats.des_set(p), stats.asc_set(e))

    r = _scan(class_members("S-BC", n), one)
    if r:
        return r
    return _first_diff(poly.set_dist(class_members("S-BC", n), stats.des_set), poly.set_dist(class_members("BC", n)))


@register("prop-3.2", "Lehmer code maps S_n(2134,2143,3124) onto I_n(201,210,110,101,100)", 7)
def _prop_3_2(n):
    return _code_image(codes.lehmer, "S-ABC", "ABC", n)


@register("prop-3.7", "b-code maps S_n(24135,24153,42135,42153) onto (>,!=,>) with des going to asc", 7)
def _prop_3_7(n):
    r = _code_image(codes.b_code, "S-T", "T", n)
    if r:
        return r
    got = poly.dist_poly("T", n)
    want = poly.dist_poly("S-T", n, "des")
    return None if want == got else (n, want.to_list(), got.to_list())


def _mfs_invariant(name, n):
    r = actions.is_mfs_invariant(class_members(name, n))
    return None if r is None else (r[0], f"phi_{r[1]} stays in {name}", r[2])


@register("lemma-3.4", "S_n(2134,2143) is invariant under the MFS action", 7)
def _lemma_3_4(n):
    return _mfs_invariant("S-BC", n)


@register("lemma-3.8", "S_n(24135,24153,42135,42153) is invariant under the MFS action", 7)
def _lemma_3_8(n):
    return _mfs_invariant("S-T", n)


@register("lemma-3.3", "orbit gamma-vectors equal polynomial gamma-vectors on both MFS-invariant classes", 7)
def _lemma_3_3(n):
    for name in ("S-BC", "S-T"):
        members = list(class_members(name, n))
        try:
            orb = actions.gamma_via_orbits(members)
        except Exception as exc:
            return (name, "orbit decomposition", f"{type(exc).__name__}: {exc}")
        h = poly.poly_from_values(stats.des(p) for p in members)
        try:
            pg = poly.gamma_extract(h, n - 1)
        except NotSymmetric:
            return (name, "symmetric des polynomial", h.to_list())
        if orb != pg:
            return (name, pg, orb)
    return None


# -- counting and generating functions ----------------------------------------


@register("oeis-a098746", "|I_n(>,-,>)| matches 1,2,6,23,102,495,2549,13682,75714,428882", 10)
def _oeis_a098746(n):
    if n > len(A098746):
        return None
    got = count_members("C", n)
    return None if got == A098746[n - 1] else (n, A098746[n - 1], got)


@register("ms-equi", "|I_n(>,-,>)| = |I_n(>=,!=,>)| = |I_n(>,!=,>=)|", 10)
def _ms_equi(n):
    c = count_members("C", n)
    for name in ("A", "B"):
        got = count_members(name, n)
        if got != c:
            return (name, c, got)
    return None


@register("oeis-schroeder", "(>=,!=,>=), (>,-,>=) and (>=,-,>) are counted by the large Schroeder numbers", 10)
def _oeis_schroeder(n):
    want = poly.schroeder_numbers(n - 1)[n - 1]
    for name in ("AB", "BC", "CA"):
        got = count_members(name, n)
        if got != want:
            return (name, want, got)
    return None


@register("oeis-fine", "|I_n(201,210,110,101,100)| matches 2/(1+x+sqrt(1-6x+5x^2))", 10)
def _oeis_fine(n):
    counts = [count_members("ABC", k) for k in range(n + 1)]
    try:
        poly.fine_series_check(n, counts)
    except MismatchAt as exc:
        return (exc.n, exc.expected, exc.got)
    return None


@register("gf-cubic", "counting series of (>,-,>) solves the cubic (t^2-t+1)A^3+(t-3)A^2+3A-1", 10)
def _gf_cubic(n):
    counts = [count_members("C", k) for k in range(n + 1)]
    res = poly.cubic_residual(n, counts)
    if not res.is_zero():
        k = next(i for i, c in enumerate(res.coeffs) if c)
        return (k, 0, res.coeffs[k])
    return None


# -- negative findings --------------------------------------------------------


def _nonsymmetry_witness(name):
    def per_n(n):
        h = poly.dist_poly(name, n)
        if not poly.is_symmetric(h, n - 1):
            return ("witness", n, h.to_list())
        return None

    return per_n


REGISTRY["nonsym-ca"] = Check(
    "nonsym-ca", "the asc polynomial on (>=,-,>) is not symmetric for some n", 7,
    _nonsymmetry_witness("CA"), min_search=7,
)
REGISTRY["nonsym-abc"] = Check(
    "nonsym-abc", "the asc polynomial on I_n(201,210,110,101,100) is not symmetric for some n", 7,
    _nonsymmetry_witness("ABC"), min_search=7,
)
WITNESS_CHECKS = frozenset({"nonsym-ca", "nonsym-abc"})


def check_names() -> list:
    return list(REGISTRY)


def check(name: str, maxN: Optional[int] = None) -> CheckResult:
    if name not in REGISTRY:
        raise UnknownCheck(f"unknown check {name!r}")
    c = REGISTRY[name]
    maxN = c.default_max if maxN is None else maxN
    check_limit(maxN)
    start = time.perf_counter()
    if name in WITNESS_CHECKS:
        return _run_witness(c, maxN, start)
    for n in range(1, maxN + 1):
        cx = c.per_n(n)
        if cx is not None:
            return CheckResult(
                name, c.title, (1, maxN), "fail", cx, time.perf_counter() - start,
                f"fails at n={n}: {BUG}", n,
            )
    return CheckResult(name, c.title, (1, maxN), "pass", None, time.perf_counter() - start, f"holds for 1 <= n <= {maxN}")


def _run_witness(c: Check, maxN: int, start: float) -> CheckResult:
    # a negative claim needs a concrete witness, so search at least min_search deep
    top = min(max(maxN, c.min_search), resource_limit())
    for n in range(1, top + 1):
        found = c.per_n(n)
        if found is not None:
            _, wn, coeffs = found
            return CheckResult(
                c.name, c.title, (1, top), "pass", None, time.perf_counter() - start,
                f"not symmetric at n={wn}: coefficients {coeffs}", None,
            )
    return CheckResult(
        c.name, c.title, (1, top), "fail", (top, "a nonsymmetric n", "all symmetric"),
        time.perf_counter() - start, f"no witness for n <= {top}", top,
    )


def witness_of(name: str, maxN: int = 7) -> Optional[tuple]:
    """(n, coefficient list) of the first nonsymmetric asc polynomial, or None."""
    per_n = _nonsymmetry_witness(name)
    for n in range(1, maxN + 1):
        r = per_n(n)
        if r:
            return r[1], r[2]
    return None


def check_all(maxN: Optional[int] = None, names=None) -> list:
    return [check(name, maxN) for name in (names or check_names())]
