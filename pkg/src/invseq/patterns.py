"""Pattern containment, relation-triple avoidance and the named class registry."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .core import (
    RELATIONS,
    ClassSpec,
    check_limit,
    gen_invseqs,
    gen_perms,
    parse_class_spec,
)


def _cmp(a: int, b: int) -> int:
    return (a > b) - (a < b)


def order_isomorphic(w: Sequence[int], p: Sequence[int]) -> bool:
    """Same pattern of ties and strict inequalities between every pair of letters."""
    m = len(p)
    if len(w) != m:
        return False
    for a in range(m):
        for b in range(a + 1, m):
            if _cmp(w[a], w[b]) != _cmp(p[a], p[b]):
                return False
    return True


def contains_word_pattern(w: Sequence[int], p: Sequence[int]) -> bool:
    for idx in itertools.combinations(range(len(w)), len(p)):
        if order_isomorphic([w[i] for i in idx], p):
            return True
    return False


def find_word_pattern(w: Sequence[int], p: Sequence[int]):
    """1-based positions of the lexicographically first occurrence of p in w, or None."""
    for idx in itertools.combinations(range(len(w)), len(p)):
        if order_isomorphic([w[i] for i in idx], p):
            return tuple(i + 1 for i in idx)
    return None


def find_relation_triple(e: Sequence[int], triple) -> tuple | None:
    r1, r2, r3 = (RELATIONS[r] for r in triple)
    n = len(e)
    for i in range(n):
        for j in range(i + 1, n):
            if not r1(e[i], e[j]):
                continue
            for k in range(j + 1, n):
                if r2(e[j], e[k]) and r3(e[i], e[k]):
                    return (i + 1, j + 1, k + 1)
    return None


def avoids_relation_triple(e: Sequence[int], triple) -> bool:
    return find_relation_triple(e, triple) is None


def witness(spec: ClassSpec, w: Sequence[int]):
    """Positions of an occurrence of something the class forbids, or None if w is a member."""
    if spec.kind == "triple":
        return find_relation_triple(w, spec.triple)
    for p in spec.patterns:
        hit = find_word_pattern(w, p)
        if hit is not None:
            return hit
    return None


def is_member_naive(spec: ClassSpec, w: Sequence[int]) -> bool:
    """Direct check of the class definition (no pruning tricks)."""
    return witness(spec, w) is None


def is_member(spec: ClassSpec, w: Sequence[int]) -> bool:
    if spec.universe == "invseq" and _ternary_predicate(spec) is not None:
        n = len(w)
        if n < 3:
            return True
        if max(w) >= n:
            return is_member_naive(spec, w)
        table = _forbid_tables(spec, n)
        seen_vals: list = []
        forb = 0
        for x in w:
            if (forb >> x) & 1:
                return False
            for u in seen_vals:
                forb |= table[u][x]
            if x not in seen_vals:
                seen_vals.append(x)
        return True
    return is_member_naive(spec, w)


# -- fast prefix-pruned enumeration ------------------------------------------
#
# Both relation triples and length-3 word patterns forbid a value triple
# (u, v, y) occurring at i<j<k.  While extending a prefix we keep a bitmask of
# values already present and a bitmask of values forbidden for every later
# position; appending x forbids every y with bad(u, x, y) for some earlier u.


def _ternary_predicate(spec: ClassSpec):
    if spec.kind == "triple":
        r1, r2, r3 = (RELATIONS[r] for r in spec.triple)
        return lambda u, v, y: r1(u, v) and r2(v, y) and r3(u, y)
    if all(len(p) == 3 for p in spec.patterns):
        pats = spec.patterns
        return lambda u, v, y: any(order_isomorphic((u, v, y), p) for p in pats)
    return None


@lru_cache(maxsize=64)
def _forbid_tables(spec: ClassSpec, n: int):
    bad = _ternary_predicate(spec)
    return [[sum(1 << y for y in range(n) if bad(u, x, y)) for x in range(n)] for u in range(n)]


def _iter_ternary(spec: ClassSpec, n: int, count_only: bool = False):
    table = _forbid_tables(spec, n)
    cache: dict = {}

    def extend(seen: int, x: int) -> int:
        key = (seen, x)
        m = cache.get(key)
        if m is None:
            m = 0
            u, s = 0, seen
            while s:
                if s & 1:
                    m |= table[u][x]
                s >>= 1
                u += 1
            cache[key] = m
        return m

    if n == 0:
        yield 1 if count_only else ()
        return
    prefix = [0] * n
    # stack of (position, next candidate value, seen mask, forbidden mask)
    stack = [(0, 0, 0, 0)]
    while stack:
        k, x, seen, forb = stack.pop()
        if x > k:
            continue
        stack.append((k, x + 1, seen, forb))
        if (forb >> x) & 1:
            continue
        prefix[k] = x
        if k == n - 1:
            yield 1 if count_only else tuple(prefix)
            continue
        nforb = forb | extend(seen, x)
        nseen = seen | (1 << x)
        if count_only and k == n - 2:
            free = ~nforb & ((1 << n) - 1)
            yield bin(free).count("1")
            continue
        stack.append((k + 1, 0, nseen, nforb))


def _iter_general(spec: ClassSpec, n: int, universe: str) -> Iterator[tuple]:
    pats = spec.patterns

    def ok(prefix: list) -> bool:
        k = len(prefix) - 1
        last = prefix[k]
        for p in pats:
            m = len(p)
            for idx in itertools.combinations(range(k), m - 1):
                if order_isomorphic([prefix[i] for i in idx] + [last], p):
                    return False
        return True

    prefix: list = []
    used = [False] * (n + 2)

    def rec(k: int):
        if k == n:
            yield tuple(prefix)
            return
        values = range(1, n + 1) if universe == "perm" else range(k + 1)
        for x in values:
            if universe == "perm" and used[x]:
                continue
            prefix.append(x)
            if ok(prefix):
                if universe == "perm":
                    used[x] = True
                yield from rec(k + 1)
                if universe == "perm":
                    used[x] = False
            prefix.pop()

    yield from rec(0)


def class_members(spec: ClassSpec | str, n: int) -> Iterator[tuple]:
    """Members of the class of length n, in lexicographic order."""
    spec = as_spec(spec)
    check_limit(n)
    if spec.universe == "invseq" and _ternary_predicate(spec) is not None:
        return _iter_ternary(spec, n)
    return _iter_general(spec, n, spec.universe)


def count_members(spec: ClassSpec | str, n: int) -> int:
    spec = as_spec(spec)
    check_limit(n)
    if spec.universe == "invseq" and _ternary_predicate(spec) is not None:
        return sum(_iter_ternary(spec, n, count_only=True))
    return sum(1 for _ in class_members(spec, n))


def naive_members(spec: ClassSpec | str, n: int) -> Iterator[tuple]:
    """Filter the full universe with the literal definition; reference route."""
    spec = as_spec(spec)
    source = gen_perms(n) if spec.universe == "perm" else gen_invseqs(n)
    return (w for w in source if is_member_naive(spec, w))


# -- registry ----------------------------------------------------------------


@dataclass(frozen=True)
class ClassRegistryEntry:
    name: str
    spec: ClassSpec
    equivalents: tuple = field(default=())
    description: str = ""


def _entry(name, text, *equivs, description=""):
    return ClassRegistryEntry(
        name, parse_class_spec(text), tuple(parse_class_spec(t) for t in equivs), description
    )


REGISTRY = {
    e.name: e
    for e in (
        _entry("A", "(>=,!=,>)", "201,210,110"),
        _entry("B", "(>,!=,>=)", "201,210,101"),
        _entry("C", "(>,-,>)", "201,210,100"),
        _entry("T", "(>,!=,>)", "201,210", description="contains A, B and C"),
        _entry("AB", "(>=,!=,>=)", "201,210,110,101", description="large Schroeder"),
        _entry("BC", "(>,-,>=)", "201,210,100,101", description="large Schroeder"),
        _entry("CA", "(>=,-,>)", "201,210,110,100", description="large Schroeder"),
        _entry("ABC", "201,210,110,101,100", description="binomial transform of Fine's sequence"),
        _entry("alpha-dom", "(>=,>,-)", "110,210", description="domain of alpha"),
        _entry("alpha-img", "(>,>=,-)", "100,210", description="image of alpha"),
        _entry("S-BC", "perm:2134,2143", description="Lehmer preimage of BC"),
        _entry("S-ABC", "perm:2134,2143,3124", description="Lehmer preimage of ABC"),
        _entry("S-T", "perm:24135,24153,42135,42153", description="b-code preimage of T"),
    )
}


def as_spec(spec: ClassSpec | str) -> ClassSpec:
    """Accept a ClassSpec, a registry name or class-spec text."""
    if isinstance(spec, ClassSpec):
        return spec
    if spec in REGISTRY:
        return REGISTRY[spec].spec
    return parse_class_spec(spec)


# named domains used by the bijections
GAMMA_DOMAIN = parse_class_spec("201,210,100")  # == C
PSI_IMAGE = parse_class_spec("201,210,101")  # == B
CORNER = parse_class_spec("201,210,100,101")  # == BC


def check_class_identities(n: int) -> list[dict]:
    """Compare every registry entry with its listed equivalents over all of I_n.

    Each side is filtered with its own literal predicate.  Returns one record per
    (entry, equivalent) pair; ``equal`` is False iff a witness was found.
    """
    check_limit(n)
    report = []
    for entry in REGISTRY.values():
        for eq in entry.equivalents:
            witness_seq = None
            size = 0
            for w in gen_invseqs(n):
                a, b = is_member_naive(entry.spec, w), is_member_naive(eq, w)
                if a != b:
                    witness_seq = w
                    break
                size += a
            report.append(
                {
                    "name": entry.name,
                    "spec": entry.spec.render(),
                    "equivalent": eq.render(),
                    "n": n,
                    "equal": witness_seq is None,
                    "size": size if witness_seq is None else None,
                    "witness": witness_seq,
                }
            )
    return report
