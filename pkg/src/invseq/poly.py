"""Exact integer polynomials, truncated power series, distribution tables and
gamma-vector extraction.  No floating point anywhere.
"""
from __future__ import annotations

from collections import Counter
from typing import Iterable, Sequence

from .errors import MismatchAt, NotSymmetric
from .patterns import as_spec, class_members, count_members
from .stats import asc, asc_set, des, descent_tops


class IntPoly:
    """Univariate polynomial with int coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        return cls([0] * k + [c])

    @classmethod
    def one_plus_t_pow(cls, m: int) -> "IntPoly":
        row = [1]
        for _ in range(m):
            row = [a + b for a, b in zip([0] + row, row + [0])]
        return cls(row)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        m = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[k] + other[k] for k in range(m))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        m = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[k] - other[k] for k in range(m))

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def to_list(self) -> list:
        return list(self.coeffs)


class IntSeries:
    """Power series truncated after t^order; arithmetic is exact modulo t^(order+1)."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[int], order: int):
        c = [int(x) for x in coeffs][: order + 1]
        c += [0] * (order + 1 - len(c))
        self.coeffs = tuple(c)
        self.order = order

    def _coerce(self, other) -> "IntSeries":
        if isinstance(other, IntSeries):
            if other.order != self.order:
                raise ValueError("series orders differ")
            return other
        if isinstance(other, IntPoly):
            return IntSeries(other.coeffs, self.order)
        if isinstance(other, int):
            return IntSeries([other], self.order)
        return NotImplemented

    def __add__(self, other) -> "IntSeries":
        o = self._coerce(other)
        return IntSeries((a + b for a, b in zip(self.coeffs, o.coeffs)), self.order)

    __radd__ = __add__

    def __neg__(self) -> "IntSeries":
        return IntSeries((-a for a in self.coeffs), self.order)

    def __sub__(self, other) -> "IntSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "IntSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "IntSeries":
        o = self._coerce(other)
        N = self.order
        out = [0] * (N + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(N + 1 - i):
                    out[i + j] += a * o.coeffs[j]
        return IntSeries(out, N)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntSeries":
        out = IntSeries([1], self.order)
        for _ in range(k):
            out = out * self
        return out

    def inverse(self) -> "IntSeries":
        """Multiplicative inverse; needs a constant term of +1 or -1 to stay integral."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise ValueError("constant term must be a unit")
        N = self.order
        inv = [0] * (N + 1)
        inv[0] = c0
        for k in range(1, N + 1):
            s = sum(self.coeffs[j] * inv[k - j] for j in range(1, k + 1))
            inv[k] = -s * c0
        return IntSeries(inv, N)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __repr__(self) -> str:
        return f"IntSeries({list(self.coeffs)}, order={self.order})"


# -- distributions -----------------------------------------------------------


def _stat_fn(stat: str):
    return {"asc": asc, "des": des}[stat]


def dist_poly(spec, n: int, stat: str | None = None) -> IntPoly:
    """Coefficient of t^k counts members with stat = k (asc on sequences, des on permutations)."""
    spec = as_spec(spec)
    stat = stat or ("des" if spec.universe == "perm" else "asc")
    f = _stat_fn(stat)
    counts = Counter(f(w) for w in class_members(spec, n))
    top = max(counts, default=-1)
    return IntPoly(counts.get(k, 0) for k in range(top + 1))


def poly_from_values(values: Iterable[int]) -> IntPoly:
    counts = Counter(values)
    top = max(counts, default=-1)
    return IntPoly(counts.get(k, 0) for k in range(top + 1))


class JointDist(dict):
    """Map from (asc, sorted descent-top tuple) to count."""

    def total(self) -> int:
        return sum(self.values())

    def complemented(self, n: int) -> "JointDist":
        return JointDist({(n - 1 - a, dt): c for (a, dt), c in self.items()})

    def to_json(self) -> list:
        return [{"key": {"asc": a, "dt": list(dt)}, "count": c} for (a, dt), c in sorted(self.items())]


def joint_dist(spec, n: int) -> JointDist:
    spec = as_spec(spec)
    return JointDist(Counter((asc(e), descent_tops(e)) for e in class_members(spec, n)))


def joint_dist_of(seqs: Iterable[Sequence[int]]) -> JointDist:
    return JointDist(Counter((asc(e), descent_tops(e)) for e in seqs))


def set_dist(seqs: Iterable[Sequence[int]], stat=asc_set) -> Counter:
    """Set-valued distribution: sorted position tuple -> count."""
    return Counter(stat(w) for w in seqs)


# -- symmetry, unimodality, gamma --------------------------------------------


def is_symmetric(h: IntPoly, d: int) -> bool:
    if h.degree > d:
        return False
    return all(h[i] == h[d - i] for i in range(d + 1))


def is_unimodal(h: IntPoly) -> bool:
    c = h.coeffs
    k = 0
    while k + 1 < len(c) and c[k] <= c[k + 1]:
        k += 1
    while k + 1 < len(c) and c[k] >= c[k + 1]:
        k += 1
    return k >= len(c) - 1


def gamma_extract(h: IntPoly, d: int) -> list:
    """Coefficients g_k with h = sum_k g_k t^k (1+t)^(d-2k), by peeling from the bottom."""
    if h.degree > d or not is_symmetric(h, d):
        raise NotSymmetric(h.coeffs, d)
    rest = h
    gam = []
    for k in range(d // 2 + 1):
        g = rest[k]
        gam.append(g)
        if g:
            rest = rest - IntPoly.monomial(k, g) * IntPoly.one_plus_t_pow(d - 2 * k)
    if rest.coeffs:
        raise ArithmeticError(f"nonzero residual {rest} after gamma peeling")
    return gam


def gamma_expand(gam: Sequence[int], d: int) -> IntPoly:
    out = IntPoly()
    for k, g in enumerate(gam):
        out = out + IntPoly.monomial(k, g) * IntPoly.one_plus_t_pow(d - 2 * k)
    return out


# -- generating-function certificates ----------------------------------------


def class_count_series(spec, maxN: int) -> IntSeries:
    """sum_{n <= maxN} |class_n| t^n, with the empty sequence giving a_0 = 1."""
    return IntSeries([count_members(spec, n) for n in range(maxN + 1)], maxN)


def cubic_residual(maxN: int, counts: Sequence[int] | None = None) -> IntSeries:
    """(t^2-t+1)A^3 + (t-3)A^2 + 3A - 1 for A the counting series of I_n(>,-,>)."""
    A = IntSeries(counts, maxN) if counts is not None else class_count_series("(>,-,>)", maxN)
    N = maxN
    A2 = A * A
    A3 = A2 * A
    return IntSeries([1, -1, 1], N) * A3 + IntSeries([-3, 1], N) * A2 + A * 3 - 1


FINE_BINOMIAL_RADICAND = (1, -6, 5)


def fine_binomial_coefficients(maxN: int) -> list:
    """Coefficients of 2/(1+x+sqrt(1-6x+5x^2)).

    Clearing the radical gives (1+x)B = 1 + (2x - x^2)B^2, a recurrence in the
    coefficients of B.
    """
    b = [1]
    for n in range(1, maxN + 1):
        sq = [sum(b[i] * b[k - i] for i in range(k + 1)) for k in range(n)]
        nxt = 2 * sq[n - 1] - (sq[n - 2] if n >= 2 else 0) - b[n - 1]
        b.append(nxt)
    return b


def fine_residual(B: IntSeries) -> IntSeries:
    """(2/B - 1 - x)^2 - (1 - 6x + 5x^2); zero iff B is the Fine binomial transform."""
    N = B.order
    S = B.inverse() * 2 - IntSeries([1, 1], N)
    return S * S - IntSeries(FINE_BINOMIAL_RADICAND, N)


def fine_series_check(maxN: int, counts: Sequence[int] | None = None) -> bool:
    """Counts of I_n(201,210,110,101,100) against 2/(1+x+sqrt(1-6x+5x^2)).

    Raises MismatchAt at the first differing coefficient.
    """
    got = list(counts) if counts is not None else [count_members("201,210,110,101,100", n) for n in range(maxN + 1)]
    expected = fine_binomial_coefficients(maxN)
    for n, (a, b) in enumerate(zip(expected, got)):
        if a != b:
            raise MismatchAt(n, a, b)
    residual = fine_residual(IntSeries(got, maxN))
    if not residual.is_zero():
        k = next(i for i, c in enumerate(residual.coeffs) if c)
        raise MismatchAt(k, 0, residual.coeffs[k])
    return True


def schroeder_numbers(m: int) -> list:
    """Large Schroeder numbers r_0..r_m: (k+1) r_k = 3(2k-1) r_{k-1} - (k-2) r_{k-2}."""
    r = [1, 2]
    for k in range(2, m + 1):
        r.append((3 * (2 * k - 1) * r[k - 1] - (k - 2) * r[k - 2]) // (k + 1))
    return r[: m + 1]
