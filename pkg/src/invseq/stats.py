"""Statistics of inversion sequences.

All position sets are 1-based.  Peaks, valleys and the special fixed/unfixed
positions are computed with the boundary convention e_0 = e_{n+1} = +infinity.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Optional, Sequence

from .core import ClassSpec
from .errors import NotInClass
from .patterns import GAMMA_DOMAIN, class_members, is_member, witness

INF = math.inf


def _ext(e: Sequence[int]) -> list:
    return [INF, *e, INF]


def asc_set(e: Sequence[int]) -> tuple:
    return tuple(i + 1 for i in range(len(e) - 1) if e[i] < e[i + 1])


def des_set(e: Sequence[int]) -> tuple:
    return tuple(i + 1 for i in range(len(e) - 1) if e[i] > e[i + 1])


def asc(e: Sequence[int]) -> int:
    return sum(1 for i in range(len(e) - 1) if e[i] < e[i + 1])


def des(w: Sequence[int]) -> int:
    return sum(1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def descent_tops(e: Sequence[int]) -> tuple:
    """Multiset of descent tops, sorted nondecreasingly."""
    return tuple(sorted(e[i] for i in range(len(e) - 1) if e[i] > e[i + 1]))


def peaks(e: Sequence[int]) -> tuple:
    x = _ext(e)
    return tuple(i for i in range(1, len(e) + 1) if x[i - 1] < x[i] >= x[i + 1])


def valleys(e: Sequence[int]) -> tuple:
    x = _ext(e)
    return tuple(i for i in range(1, len(e) + 1) if x[i - 1] >= x[i] < x[i + 1])


def _special(e: Sequence[int], equal_next: bool) -> tuple:
    x = _ext(e)
    out = []
    # i = 1 has no e_{i-2}; i = 2 is excluded by the +inf sentinel at e_0
    for i in range(3, len(e) + 1):
        if x[i - 1] < x[i - 2] == x[i] and (x[i] == x[i + 1]) == equal_next:
            out.append(i)
    return tuple(out)


def special_fixed(e: Sequence[int]) -> tuple:
    return _special(e, equal_next=False)


def special_unfixed(e: Sequence[int]) -> tuple:
    return _special(e, equal_next=True)


def crucial_positions(e: Sequence[int]) -> tuple:
    """Positions i with e_{i-2} e_{i-1} e_i forming a 101 pattern."""
    return tuple(i + 1 for i in range(2, len(e)) if e[i] == e[i - 2] > e[i - 1])


def double_ascents(e: Sequence[int]) -> tuple:
    return tuple(i + 1 for i in range(len(e) - 2) if e[i] < e[i + 1] < e[i + 2])


def left_to_right_maxima(e: Sequence[int]) -> tuple:
    out, best = [], -1
    for i, v in enumerate(e):
        if v > best:
            out.append(i + 1)
            best = v
    return tuple(out)


def roles(e: Sequence[int]) -> tuple[tuple, tuple, tuple]:
    """(Fix, Tr, Tl) for a sequence in I_n(100,210,201).

    The to-left set excludes special unfixed positions, which belong to the
    to-right set; otherwise the three sets would not be disjoint.
    """
    n = len(e)
    x = _ext(e)
    pk, va = set(peaks(e)), set(valleys(e))
    sf, su = set(special_fixed(e)), set(special_unfixed(e))
    fix = (pk - su) | va | sf
    tr = {i for i in range(1, n + 1) if i not in fix and x[i - 1] == x[i]} | su
    if n >= 2 and e[0] == e[1] == 0:
        tr.add(1)
    tl = {i for i in range(1, n + 1) if i not in fix and i not in su and x[i - 1] < x[i]}
    return tuple(sorted(fix)), tuple(sorted(tr)), tuple(sorted(tl))


def in_gamma_domain(e: Sequence[int]) -> bool:
    return is_member(GAMMA_DOMAIN, e)


def require_domain(e: Sequence[int], spec: ClassSpec = GAMMA_DOMAIN, label: str = "I_n(100,210,201)") -> None:
    if not is_member(spec, e):
        raise NotInClass(e, label, witness(spec, e))


@dataclass(frozen=True)
class StatProfile:
    n: int
    asc_set: tuple
    des_set: tuple
    dt: tuple
    pk_set: tuple
    va_set: tuple
    sf_set: tuple
    su_set: tuple
    double_asc: tuple
    l2r_max: tuple
    crucial: tuple
    fix_set: Optional[tuple] = None
    tr_set: Optional[tuple] = None
    tl_set: Optional[tuple] = None

    @property
    def asc(self) -> int:
        return len(self.asc_set)

    @property
    def des(self) -> int:
        return len(self.des_set)

    @property
    def pk(self) -> int:
        return len(self.pk_set)

    @property
    def va(self) -> int:
        return len(self.va_set)

    @property
    def sf(self) -> int:
        return len(self.sf_set)

    @property
    def su(self) -> int:
        return len(self.su_set)

    @property
    def tr(self) -> int:
        return len(self.tr_set) if self.tr_set is not None else None

    @property
    def tl(self) -> int:
        return len(self.tl_set) if self.tl_set is not None else None

    def to_dict(self) -> dict:
        return {k: (list(v) if isinstance(v, tuple) else v) for k, v in asdict(self).items()}


def profile(e: Sequence[int]) -> StatProfile:
    """Every statistic of e; Fix/Tr/Tl are None when e is outside I_n(100,210,201)."""
    e = tuple(e)
    fix = tr = tl = None
    if in_gamma_domain(e):
        fix, tr, tl = roles(e)
    return StatProfile(
        n=len(e),
        asc_set=asc_set(e),
        des_set=des_set(e),
        dt=descent_tops(e),
        pk_set=peaks(e),
        va_set=valleys(e),
        sf_set=special_fixed(e),
        su_set=special_unfixed(e),
        double_asc=double_ascents(e),
        l2r_max=left_to_right_maxima(e),
        crucial=crucial_positions(e),
        fix_set=fix,
        tr_set=tr,
        tl_set=tl,
    )


def asc_expansion_check(e: Sequence[int]) -> bool:
    """asc(e) == tl(e) + va(e) + sf(e) - 1 on I_n(100,210,201), n >= 1."""
    require_domain(e)
    if not e:
        raise NotInClass(e, "I_n(100,210,201) with n >= 1")
    _, _, tl = roles(e)
    return asc(e) == len(tl) + len(valleys(e)) + len(special_fixed(e)) - 1


def in_tilde(e: Sequence[int], k: int) -> bool:
    """asc = k, no double ascents and e_{n-1} >= e_n (vacuous for n = 1)."""
    n = len(e)
    if asc(e) != k or double_ascents(e):
        return False
    return n < 2 or e[n - 2] >= e[n - 1]


def tilde_class_count(spec, n: int, k: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    if k < 0 or k > (n - 1) // 2:
        return 0
    return sum(1 for e in class_members(spec, n) if in_tilde(e, k))


def tilde_counts(spec, n: int) -> list[int]:
    counts = [0] * ((n - 1) // 2 + 1)
    for e in class_members(spec, n):
        k = asc(e)
        if k < len(counts) and in_tilde(e, k):
            counts[k] += 1
    return counts
