"""Exact Clifford algebras Cl(p,q,r), Salingaros vee groups and their group algebras."""

import json as _json

from ._core import (
    Signature,
    cmul,
    conjugation,
    grade_involution,
    k_value,
    mul,
    normalize,
    radon_hurwitz,
    reversion,
    transposition,
)
from . import _core

__all__ = [
    "Signature",
    "classify",
    "cmul",
    "conjugation",
    "grade_involution",
    "idempotents",
    "k_value",
    "mul",
    "normalize",
    "radon_hurwitz",
    "reversion",
    "table2",
    "transposition",
    "verify",
]


def classify(p, q):
    """Salingaros class of G_{p,q} as a dict."""
    return _json.loads(_core.classify_json(p, q))


def table2(max_order=256):
    """All vee groups of order <= max_order, grouped per signature."""
    return _json.loads(_core.table2_json(max_order))


def idempotents(p, q):
    """Canonical primitive idempotent data for Cl(p,q)."""
    return _json.loads(_core.idempotents_json(p, q))


def verify(which, p, q):
    """Run a verifier ('chernov', 'main-theorem', 'structure', 'passman')."""
    return _json.loads(_core.verify_json(which, p, q))
