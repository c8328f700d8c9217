"""Degree-0 Milnor-Witt presentations of finite rings, sums of squares and a
certified rewrite prover. Every function returns plain dicts and lists."""

import json

from . import _mwkit
from ._mwkit import MwkError, __version__

__all__ = ["MwkError", "__version__", "ring_info", "gw", "sumsq", "compare", "validate", "prove", "check", "table"]


def ring_info(ring):
    return json.loads(_mwkit.ring_info(ring))


def gw(ring, kind="reduced"):
    return json.loads(_mwkit.gw(ring, kind))


def sumsq(ring):
    return json.loads(_mwkit.sumsq(ring))


def compare(ring):
    return json.loads(_mwkit.compare(ring))


def validate(ring):
    return json.loads(_mwkit.validate(ring))


def prove(identity, mode="hopf", hyp="", depth=12, max_words=32):
    return json.loads(_mwkit.prove(identity, mode, hyp, depth, max_words))


def check(proof):
    """Replays a proof dict (the "proof" entry of a prove() report)."""
    return _mwkit.check(json.dumps(proof))


def table(specs, fmt="csv"):
    return _mwkit.table(list(specs), fmt)
