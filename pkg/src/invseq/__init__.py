"""Ascent statistics, bijections and gamma-positivity on pattern-avoiding inversion sequences."""
from .core import ClassSpec, gen_invseqs, gen_perms, parse_class_spec, parse_sequence, render_sequence
from .errors import InvSeqError
from .patterns import REGISTRY, as_spec, class_members, count_members, is_member

__all__ = [
    "ClassSpec",
    "InvSeqError",
    "REGISTRY",
    "as_spec",
    "class_members",
    "count_members",
    "gen_invseqs",
    "gen_perms",
    "is_member",
    "parse_class_spec",
    "parse_sequence",
    "render_sequence",
]

__version__ = "0.1.0"
