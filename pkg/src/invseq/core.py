"""Inversion sequences, permutations, class specifications and their generators.

Sequences and permutations are plain tuples of ints.  Storage is 0-based but
every position reported by the package is 1-based.
"""
from __future__ import annotations

import itertools
import math
import operator
import os
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import OutOfRange, ParseError, ResourceLimit

InvSeq = tuple  # tuple[int, ...] with 0 <= e_i <= i-1
Perm = tuple  # tuple[int, ...], a rearrangement of 1..n

DEFAULT_MAX_N = 12

RELATIONS = {
    "<": operator.lt,
    ">": operator.gt,
    "<=": operator.le,
    ">=": operator.ge,
    "=": operator.eq,
    "!=": operator.ne,
    "-": lambda a, b: True,
}

# unicode forms accepted on input, rendered back as ASCII
_REL_ALIASES = {"≤": "<=", "≥": ">=", "≠": "!=", "−": "-"}


def resource_limit() -> int:
    env = os.environ.get("INVSEQ_MAX_N")
    return int(env) if env else DEFAULT_MAX_N


def check_limit(n: int) -> None:
    limit = resource_limit()
    if n > limit:
        raise ResourceLimit(n, limit)


def validate_invseq(entries: Iterable[int]) -> InvSeq:
    e = tuple(int(x) for x in entries)
    for i, x in enumerate(e):
        if x < 0 or x > i:
            raise OutOfRange(i + 1, x, i)
    return e


def is_invseq(e: Sequence[int]) -> bool:
    return all(0 <= x <= i for i, x in enumerate(e))


def validate_perm(images: Iterable[int]) -> Perm:
    p = tuple(int(x) for x in images)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ParseError(0, f"not a permutation of 1..{len(p)}", ",".join(map(str, p)))
    return p


def gen_invseqs(n: int) -> Iterator[InvSeq]:
    """All n! inversion sequences of length n in lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    check_limit(n)
    return itertools.product(*(range(i) for i in range(1, n + 1)))


def gen_perms(n: int) -> Iterator[Perm]:
    """All permutations of 1..n in lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    check_limit(n)
    return itertools.permutations(range(1, n + 1))


def count_invseqs(n: int) -> int:
    return math.factorial(n)


@dataclass(frozen=True)
class ClassSpec:
    """A pattern class: a relation triple or a set of word/permutation patterns."""

    kind: str  # "triple" or "patterns"
    triple: tuple = ()
    patterns: tuple = ()
    universe: str = "invseq"  # "invseq" or "perm"

    def __post_init__(self):
        if self.kind == "triple":
            if len(self.triple) != 3 or any(r not in RELATIONS for r in self.triple):
                raise ValueError(f"bad relation triple {self.triple!r}")
            if self.universe != "invseq":
                raise ValueError("relation triples only apply to inversion sequences")
        elif self.kind == "patterns":
            if not self.patterns:
                raise ValueError("empty pattern set")
            for p in self.patterns:
                _check_pattern(p, self.universe)
        else:
            raise ValueError(f"unknown class kind {self.kind!r}")

    @classmethod
    def from_triple(cls, r1: str, r2: str, r3: str) -> "ClassSpec":
        return cls("triple", triple=tuple(_REL_ALIASES.get(r, r) for r in (r1, r2, r3)))

    @classmethod
    def from_patterns(cls, patterns: Iterable, universe: str = "invseq") -> "ClassSpec":
        pats = []
        for p in patterns:
            p = tuple(int(c) for c in p) if isinstance(p, str) else tuple(p)
            if p not in pats:
                pats.append(p)
        return cls("patterns", patterns=tuple(pats), universe=universe)

    def render(self) -> str:
        if self.kind == "triple":
            return "(" + ",".join(self.triple) + ")"
        body = ",".join("".join(map(str, p)) for p in self.patterns)
        return "perm:" + body if self.universe == "perm" else body

    def __str__(self) -> str:
        return self.render()


def _check_pattern(p: tuple, universe: str) -> None:
    if not p:
        raise ValueError("empty pattern")
    values = sorted(set(p))
    if universe == "perm":
        if sorted(p) != list(range(1, len(p) + 1)):
            raise ValueError(f"{p} is not a permutation pattern")
    elif universe == "invseq":
        if values != list(range(len(values))):
            raise ValueError(f"{p} does not use an initial segment of values")
    else:
        raise ValueError(f"unknown universe {universe!r}")


_REL_TOKEN = re.compile(r"<=|>=|!=|≤|≥|≠|[<>=\-−]")


def parse_class_spec(text: str) -> ClassSpec:
    """Parse ``(>=,!=,>)``, ``201,210,110`` or ``perm:2134,2143``."""
    if not text or not text.strip():
        raise ParseError(0, "empty class specification")
    s = text.strip()
    offset = len(text) - len(text.lstrip())
    if s.startswith("("):
        return _parse_triple(s, offset)
    universe = "invseq"
    if s.startswith("perm:"):
        universe, offset, s = "perm", offset + 5, s[5:]
    pats = []
    pos = offset
    for tok in s.split(","):
        word = tok.strip()
        if not word or not word.isdigit():
            raise ParseError(pos, "expected a digit string", tok)
        pats.append(tuple(int(c) for c in word))
        pos += len(tok) + 1
    try:
        return ClassSpec.from_patterns(pats, universe)
    except ValueError as exc:
        raise ParseError(offset, str(exc)) from None


def _parse_triple(s: str, offset: int) -> ClassSpec:
    if not s.endswith(")"):
        raise ParseError(offset + len(s), "missing ')'")
    rels = []
    pos = offset + 1
    for tok in s[1:-1].split(","):
        t = tok.strip()
        if not _REL_TOKEN.fullmatch(t):
            raise ParseError(pos + tok.find(t) if t else pos, "unknown relation", t)
        rels.append(_REL_ALIASES.get(t, t))
        pos += len(tok) + 1
    if len(rels) != 3:
        raise ParseError(offset, f"expected 3 relations, got {len(rels)}")
    return ClassSpec.from_triple(*rels)


def parse_sequence(text: str) -> tuple:
    """Parse a comma-separated list of decimal values."""
    text = text.strip()
    if not text:
        return ()
    out = []
    pos = 0
    for tok in text.split(","):
        t = tok.strip()
        if not t.isdigit():
            raise ParseError(pos, "expected a nonnegative integer", tok)
        out.append(int(t))
        pos += len(tok) + 1
    return tuple(out)


def render_sequence(seq: Sequence[int]) -> str:
    return ",".join(map(str, seq))
