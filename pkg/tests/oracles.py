"""Reference implementations written independently of the package.

Nothing here imports invseq; every helper is the most literal reading of a
definition, or a closed formula for a published counting sequence.
"""
import itertools
import math
from fractions import Fraction

A098746 = [1, 2, 6, 23, 102, 495, 2549, 13682, 75714, 428882]
FINE_BINOMIAL = [1, 1, 2, 6, 21, 79, 311, 1265]

REL = {
    "<": lambda a, b: a < b,
    ">": lambda a, b: a > b,
    "<=": lambda a, b: a <= b,
    ">=": lambda a, b: a >= b,
    "=": lambda a, b: a == b,
    "!=": lambda a, b: a != b,
    "-": lambda a, b: True,
}


def all_invseqs(n):
    return [tuple(e) for e in itertools.product(*[range(i + 1) for i in range(n)])]


def all_perms(n):
    return list(itertools.permutations(range(1, n + 1)))


def standardize(w):
    """Replace letters by their rank among distinct letters (ties kept)."""
    ranks = {v: k for k, v in enumerate(sorted(set(w)))}
    return tuple(ranks[v] for v in w)


def contains(w, p):
    p = standardize(p)
    return any(standardize([w[i] for i in idx]) == p for idx in itertools.combinations(range(len(w)), len(p)))


def avoids_all(w, pats):
    return not any(contains(w, p) for p in pats)


def avoids_triple(e, triple):
    r1, r2, r3 = (REL[r] for r in triple)
    return not any(
        r1(e[i], e[j]) and r2(e[j], e[k]) and r3(e[i], e[k])
        for i, j, k in itertools.combinations(range(len(e)), 3)
    )


def asc_positions(e):
    return tuple(i for i in range(1, len(e)) if e[i - 1] < e[i])


def des_positions(e):
    return tuple(i for i in range(1, len(e)) if e[i - 1] > e[i])


def descent_top_multiset(e):
    return tuple(sorted(e[i - 1] for i in des_positions(e)))


def lehmer(p):
    return tuple(len([x for x in p[:i] if x > p[i]]) for i in range(len(p)))


def large_schroeder(n):
    """r_n = sum_k C(n+k, n-k) * Catalan(k)."""
    return sum(math.comb(n + k, n - k) * math.comb(2 * k, k) // (k + 1) for k in range(n + 1))


def _series_sqrt(c, order):
    """Square root of a power series with constant term 1, over the rationals."""
    s = [Fraction(0)] * (order + 1)
    s[0] = Fraction(1)
    for k in range(1, order + 1):
        acc = Fraction(c[k] if k < len(c) else 0) - sum(s[i] * s[k - i] for i in range(1, k))
        s[k] = acc / 2
    return s


def fine_binomial_series(order):
    """Coefficients of 2/(1+x+sqrt(1-6x+5x^2)), computed with a genuine series square root."""
    root = _series_sqrt([1, -6, 5], order)
    den = list(root)
    den[0] += 1
    den[1] += 1
    inv = [Fraction(0)] * (order + 1)
    inv[0] = 1 / den[0]
    for k in range(1, order + 1):
        inv[k] = -sum(den[j] * inv[k - j] for j in range(1, k + 1)) / den[0]
    out = [2 * x for x in inv]
    assert all(x.denominator == 1 for x in out)
    return [int(x) for x in out]


def eulerian(n):
    """Coefficients of sum over S_n of t^des."""
    if n == 0:
        return [1]
    row = [1]
    for m in range(2, n + 1):
        new = [0] * m
        for k in range(m):
            new[k] = (k + 1) * (row[k] if k < len(row) else 0) + (m - k) * (row[k - 1] if k >= 1 else 0)
        row = new
    return row


def binom_poly(m):
    return [math.comb(m, k) for k in range(m + 1)]


def expand_gamma(gam, d):
    out = [0] * (d + 1)
    for k, g in enumerate(gam):
        for i, c in enumerate(binom_poly(d - 2 * k)):
            out[k + i] += g * c
    while out and out[-1] == 0:
        out.pop()
    return out
