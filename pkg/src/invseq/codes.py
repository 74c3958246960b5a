"""Permutation codes: the Lehmer code and the labeled-interval b-code."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import check_limit
from .errors import InternalInvariant, NoPreimage


def lehmer(p: Sequence[int]) -> tuple:
    """e_i = number of earlier letters larger than p_i."""
    return tuple(sum(1 for j in range(i) if p[j] > p[i]) for i in range(len(p)))


def lehmer_inv(e: Sequence[int]) -> tuple:
    n = len(e)
    remaining = list(range(1, n + 1))
    out = [0] * n
    for i in range(n - 1, -1, -1):
        # p_i has exactly e_i larger letters among the ones still to be placed on its left
        out[i] = remaining.pop(len(remaining) - 1 - e[i])
    return tuple(out)


@dataclass(frozen=True)
class LabeledInterval:
    lo: int
    hi: int
    label: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo},{self.hi}]")

    def __contains__(self, x: int) -> bool:
        return self.lo <= x <= self.hi

    def as_tuple(self) -> tuple:
        return ((self.lo, self.hi), self.label)


Slice = tuple  # tuple[LabeledInterval, ...]


def initial_slice(n: int) -> Slice:
    return (LabeledInterval(0, n, 0),)


def slice_step(sl: Slice, x: int) -> tuple[int, Slice]:
    """Emit the label of the interval holding x and split that interval around x.

    Returns (label, next slice).  The four cases mirror whether x is the
    minimum and/or the maximum of its interval.
    """
    v = next((k for k, iv in enumerate(sl) if x in iv), None)
    if v is None:
        raise InternalInvariant(f"{x} lies in no interval of {sl}")
    iv = sl[v]
    intervals = [(s.lo, s.hi) for s in sl]
    labels = [s.label for s in sl]
    at_min, at_max = x == iv.lo, x == iv.hi
    if not at_min and at_max:
        intervals[v] = (iv.lo, x - 1)
        labels = labels[:v] + labels[v + 1:] + [labels[-1] + 1]
    elif not at_min and not at_max:
        intervals[v:v + 1] = [(x + 1, iv.hi), (iv.lo, x - 1)]
        labels = labels + [labels[-1] + 1]
    elif at_min and not at_max:
        intervals[v] = (x + 1, iv.hi)
        labels[-1] += 1
    else:
        del intervals[v]
        del labels[v]
        if not labels:
            raise InternalInvariant("slice became empty")
        labels[-1] += 1
    return iv.label, tuple(LabeledInterval(lo, hi, l) for (lo, hi), l in zip(intervals, labels))


def slices(p: Sequence[int]) -> list:
    """U_0, ..., U_{n-1} for the permutation p."""
    out = [initial_slice(len(p))]
    for x in p[:-1]:
        out.append(slice_step(out[-1], x)[1])
    return out


def b_code(p: Sequence[int]) -> tuple:
    sl = initial_slice(len(p))
    code = []
    for x in p:
        label, sl = slice_step(sl, x)
        code.append(label)
    return tuple(code)


def slice_invariants_hold(p: Sequence[int]) -> bool:
    """Intervals strictly decreasing with strictly increasing labels, and every
    non-final label of U_i shows up among the later code entries."""
    code = b_code(p)
    for i, sl in enumerate(slices(p)):
        for a, b in zip(sl, sl[1:]):
            if not (b.hi < a.lo and a.label < b.label):
                return False
        later = set(code[i:])
        if any(iv.label not in later for iv in sl[:-1]):
            return False
    return True


def b_decode(e: Sequence[int]) -> tuple:
    """The permutation whose b-code is e, by depth-first search over prefixes."""
    e = tuple(e)
    n = len(e)
    check_limit(n)
    if n > 9:
        raise ValueError("b_decode searches exhaustively and is limited to n <= 9")
    for p in _b_search(e):
        return p
    raise NoPreimage(f"no permutation has b-code {e}")


def _b_search(e: tuple) -> Iterator[tuple]:
    n = len(e)
    prefix: list = []
    used = [False] * (n + 1)

    def rec(sl: Slice):
        i = len(prefix)
        if i == n:
            yield tuple(prefix)
            return
        for x in range(1, n + 1):
            if used[x]:
                continue
            label, nxt = slice_step(sl, x)
            if label != e[i]:
                continue
            used[x] = True
            prefix.append(x)
            yield from rec(nxt)
            prefix.pop()
            used[x] = False

    yield from rec(initial_slice(n))


def b_preimages(e: Sequence[int]) -> list:
    return list(_b_search(tuple(e)))
