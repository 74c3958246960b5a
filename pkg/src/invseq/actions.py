"""Foata-Strehl and modified Foata-Strehl (MFS) actions, orbits and orbit gamma-vectors."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InternalInvariant, NotInvariant
from .stats import des


def foata_strehl(p: Sequence[int], a: int) -> tuple:
    """Swap the maximal blocks of letters larger than a on either side of a."""
    p = tuple(p)
    if not 1 <= a <= len(p):
        raise ValueError(f"letter {a} not in 1..{len(p)}")
    i = p.index(a)
    lo = i
    while lo > 0 and p[lo - 1] > a:
        lo -= 1
    hi = i + 1
    while hi < len(p) and p[hi] > a:
        hi += 1
    return p[:lo] + p[i + 1:hi] + (a,) + p[lo:i] + p[hi:]


def is_double_rise_or_fall(p: Sequence[int], a: int) -> bool:
    # 0 stands for the -infinity sentinels at both ends
    i = p.index(a)
    left = p[i - 1] if i > 0 else 0
    right = p[i + 1] if i + 1 < len(p) else 0
    return left < a < right or left > a > right


def mfs(p: Sequence[int], a: int) -> tuple:
    """Foata-Strehl move at a when a is a double rise or fall, identity otherwise."""
    p = tuple(p)
    if not 1 <= a <= len(p):
        raise ValueError(f"letter {a} not in 1..{len(p)}")
    return foata_strehl(p, a) if is_double_rise_or_fall(p, a) else p


def has_no_double_fall(p: Sequence[int]) -> bool:
    """No double descents and p_{n-1} < p_n, i.e. no double fall with -inf ends."""
    return not any(is_double_rise_or_fall(p, a) and _falls(p, a) for a in p)


def _falls(p: Sequence[int], a: int) -> bool:
    i = p.index(a)
    right = p[i + 1] if i + 1 < len(p) else 0
    return a > right


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx


@dataclass
class Orbit:
    representative: tuple
    members: frozenset

    def des_polynomial(self) -> list:
        n = len(self.representative)
        coeffs = [0] * max(n, 1)
        for p in self.members:
            coeffs[des(p)] += 1
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        return coeffs


@dataclass
class OrbitDecomposition:
    n: int
    orbits: list

    def gamma_vector(self) -> list:
        gam = [0] * ((self.n - 1) // 2 + 1)
        for orb in self.orbits:
            gam[des(orb.representative)] += 1
        return gam


def mfs_orbits(S: Iterable[Sequence[int]]) -> OrbitDecomposition:
    """Orbits of S under the group generated by the MFS involutions.

    Raises NotInvariant if some action leaves S, and InternalInvariant if an
    orbit does not have exactly one member free of double falls.
    """
    members = [tuple(p) for p in S]
    if not members:
        return OrbitDecomposition(0, [])
    n = len(members[0])
    if any(len(p) != n for p in members):
        raise ValueError("all permutations must have the same length")
    pool = set(members)
    uf = UnionFind(members)
    for p in members:
        for a in range(1, n + 1):
            q = mfs(p, a)
            if q not in pool:
                raise NotInvariant(p, a, q)
            uf.union(p, q)
    groups: dict = {}
    for p in members:
        groups.setdefault(uf.find(p), []).append(p)
    orbits = []
    for root in sorted(groups):
        group = groups[root]
        reps = [p for p in group if has_no_double_fall(p)]
        if len(reps) != 1:
            raise InternalInvariant(f"orbit of {root} has {len(reps)} representatives")
        orbits.append(Orbit(reps[0], frozenset(group)))
    return OrbitDecomposition(n, orbits)


def gamma_via_orbits(S: Iterable[Sequence[int]]) -> list:
    S = list(S)
    if not S:
        raise ValueError("empty set of permutations")
    return mfs_orbits(S).gamma_vector()


def is_mfs_invariant(S: Iterable[Sequence[int]]):
    """None if S is closed under every MFS action, else (p, a, image)."""
    members = {tuple(p) for p in S}
    for p in sorted(members):
        for a in range(1, len(p) + 1):
            q = mfs(p, a)
            if q not in members:
                return p, a, q
    return None
