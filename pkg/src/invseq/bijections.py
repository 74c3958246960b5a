"""The prefix-max/suffix-min pair alpha/beta, Burstein's map psi and its
inverse, the element moves, the involution Gamma and gamma = psi o Gamma.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .core import parse_class_spec
from .errors import InternalInvariant, NotMovable
from .patterns import GAMMA_DOMAIN, PSI_IMAGE, is_member
from .stats import require_domain, roles

ALPHA_DOMAIN = parse_class_spec("110,210")
ALPHA_IMAGE = parse_class_spec("100,210")

# Re-validate every intermediate sequence produced by Gamma.  Off by default;
# the test suite switches it on.
DEBUG_CHECKS = False


def alpha(e: Sequence[int]) -> tuple:
    """I_n(110,210) -> I_n(100,210); replaces a repeated letter by the running maximum."""
    e = tuple(e)
    require_domain(e, ALPHA_DOMAIN, "I_n(110,210)")
    n = len(e)
    out = []
    best = -1
    for j in range(n):
        best = max(best, e[j])
        out.append(best if e[j] in e[j + 1:] else e[j])
    return tuple(out)


def beta(t: Sequence[int]) -> tuple:
    """Inverse of alpha: replaces a repeated letter by the minimum of its suffix."""
    t = tuple(t)
    require_domain(t, ALPHA_IMAGE, "I_n(100,210)")
    return tuple(min(t[j:]) if t[j] in t[:j] else t[j] for j in range(len(t)))


def _psi_zero(c: list, i: int) -> Optional[int]:
    """Value of the 0 in a 101 instance whose second 1 is c[i], or None."""
    v = c[i]
    first = next((a for a in range(i) if c[a] == v), None)
    if first is None:
        return None
    zeros = {c[b] for b in range(first + 1, i) if c[b] < v}
    if not zeros:
        return None
    if len(zeros) > 1:
        raise InternalInvariant(f"ambiguous 101 instance ending at position {i + 1} of {c}")
    return zeros.pop()


def psi(e: Sequence[int]) -> tuple:
    """I_n(100,210,201) -> I_n(101,210,201), scanning left to right on the current sequence."""
    e = tuple(e)
    require_domain(e)
    c = list(e)
    for i in range(len(c)):
        z = _psi_zero(c, i)
        if z is not None:
            c[i] = z
    return tuple(c)


def _psi_inv_one(c: list, i: int) -> Optional[int]:
    """Largest 1 over the 100 instances whose second 0 is c[i], or None."""
    v = c[i]
    best = None
    high = -1  # running maximum of c[0..b-1]
    for b in range(i):
        if c[b] == v and high > v and (best is None or high > best):
            best = high
        high = max(high, c[b])
    return best


def psi_inv(t: Sequence[int]) -> tuple:
    t = tuple(t)
    require_domain(t, PSI_IMAGE, "I_n(101,210,201)")
    c = list(t)
    for i in range(len(c) - 1, -1, -1):
        one = _psi_inv_one(c, i)
        if one is not None:
            c[i] = one
    return tuple(c)


# -- moves -------------------------------------------------------------------


@dataclass
class MoveStep:
    mover: int  # 1-based position of the element in the input of Gamma (or of move)
    direction: str  # "right" or "left"
    start: int  # 1-based position before the move
    landing: int  # 1-based position after the move
    value_before: int
    value_after: int
    passed: tuple = ()  # values passed, in order
    state: Optional[tuple] = None  # whole sequence after the move, when traced

    def to_dict(self) -> dict:
        d = {
            "mover": self.mover,
            "direction": self.direction,
            "from": self.start,
            "to": self.landing,
            "valueBefore": self.value_before,
            "valueAfter": self.value_after,
        }
        return d


@dataclass
class MoveTrace:
    initial: tuple
    steps: list = field(default_factory=list)
    traced: bool = False

    @property
    def final(self) -> tuple:
        return replay(self.initial, self.steps)

    @property
    def states(self) -> list:
        return [self.initial] + [s.state for s in self.steps]

    def to_dict(self) -> dict:
        d = {"input": list(self.initial), "steps": [s.to_dict() for s in self.steps]}
        if self.traced:
            d["states"] = [list(s) for s in self.states]
        return d


def replay(initial: Sequence[int], steps) -> tuple:
    vals = list(initial)
    for s in steps:
        v = vals.pop(s.start - 1)
        if v != s.value_before:
            raise InternalInvariant(f"trace mismatch at mover {s.mover}")
        vals.insert(s.landing - 1, s.value_after)
    return tuple(vals)


def _move_right(vals: list, p: int) -> tuple[int, tuple]:
    """Carry vals[p] rightwards, +1 per element passed, until the next element is greater.

    Mutates vals; returns (landing index, passed values).  A mover that finds no
    greater element lands at the end.
    """
    v = vals.pop(p)
    q = p
    passed = []
    while q < len(vals) and vals[q] <= v:
        passed.append(vals[q])
        v += 1
        q += 1
    vals.insert(q, v)
    return q, tuple(passed)


def _move_left(vals: list, p: int) -> tuple[int, tuple]:
    """Carry vals[p] leftwards, -1 per element passed.

    Stops in front of an equal element, or right after passing a crucial element
    equal to the new value.  Crucial is judged on the other elements, which the
    mover never sits between.
    """
    v = vals.pop(p)
    q = p
    passed = []
    while q > 0:
        x = vals[q - 1]
        if x == v:
            break
        passed.append(x)
        v -= 1
        q -= 1
        if q >= 2 and vals[q - 2] == x > vals[q - 1] and x == v:
            break
    vals.insert(q, v)
    return q, tuple(passed)


def _apply_move(vals: list, ids: list, p: int, direction: str, traced: bool) -> MoveStep:
    mover = ids.pop(p)
    before = vals[p]
    mover_fn = _move_right if direction == "right" else _move_left
    q, passed = mover_fn(vals, p)
    ids.insert(q, mover)
    return MoveStep(mover, direction, p + 1, q + 1, before, vals[q], passed, tuple(vals) if traced else None)


def role_of(e: Sequence[int], i: int) -> str:
    fix, tr, tl = roles(e)
    if i in tr:
        return "right"
    if i in tl:
        return "left"
    if i in fix:
        return "fixed"
    raise InternalInvariant(f"position {i} of {tuple(e)} has no role")


def move(e: Sequence[int], i: int, traced: bool = False) -> tuple[tuple, MoveTrace]:
    """Single move of the element at 1-based position i (to-right or to-left)."""
    e = tuple(e)
    require_domain(e)
    if not 1 <= i <= len(e):
        raise NotMovable(f"position {i} out of range for length {len(e)}")
    direction = role_of(e, i)
    if direction == "fixed":
        raise NotMovable(f"position {i} of {e} is fixed")
    vals, ids = list(e), list(range(1, len(e) + 1))
    step = _apply_move(vals, ids, i - 1, direction, traced)
    return tuple(vals), MoveTrace(e, [step], traced)


def Gamma(e: Sequence[int], traced: bool = False) -> tuple[tuple, MoveTrace]:
    """The element-moving involution on I_n(100,210,201).

    Fixed elements stay.  To-right elements move in increasing order of their
    original position, then to-left elements in decreasing order.
    """
    e = tuple(e)
    require_domain(e)
    _, tr, tl = roles(e)
    vals, ids = list(e), list(range(1, len(e) + 1))
    trace = MoveTrace(e, [], traced)
    for r in tr:
        trace.steps.append(_apply_move(vals, ids, ids.index(r), "right", traced))
        _debug_check(vals)
    for l in reversed(tl):
        trace.steps.append(_apply_move(vals, ids, ids.index(l), "left", traced))
        _debug_check(vals)
    return tuple(vals), trace


def _debug_check(vals: list) -> None:
    if DEBUG_CHECKS and not is_member(GAMMA_DOMAIN, vals):
        raise InternalInvariant(f"intermediate {tuple(vals)} left I_n(100,210,201)")


def Gamma_map(e: Sequence[int]) -> tuple:
    return Gamma(e)[0]


def gamma_map(e: Sequence[int]) -> tuple:
    """psi o Gamma: complements asc and keeps the descent-top multiset."""
    return psi(Gamma(e)[0])


def gamma_inv(t: Sequence[int]) -> tuple:
    return Gamma(psi_inv(t))[0]


def track(ids_before: list, step: MoveStep) -> list:
    ids = list(ids_before)
    ids.insert(step.landing - 1, ids.pop(step.start - 1))
    return ids


def commute_check(e: Sequence[int], a: int, b: int) -> bool:
    """Whether moving the elements at a and b commutes.

    The second move acts on the same element (tracked through the first move)
    with its role recomputed on the intermediate sequence.
    """
    e = tuple(e)
    if a == b:
        raise ValueError("a and b must differ")

    def both(first: int, second: int) -> tuple:
        mid, tr1 = move(e, first)
        ids = track(list(range(1, len(e) + 1)), tr1.steps[0])
        return move(mid, ids.index(second) + 1)[0]

    return both(a, b) == both(b, a)
