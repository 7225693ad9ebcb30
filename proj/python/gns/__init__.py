"""Gap-set toolkit for generalized numerical semigroups.

A semigroup in N_0^d with finite complement is handled through its gap set: a
finite list of coordinate tuples.  Structured results are plain dicts with the
same shape the command-line tool prints.
"""

import json as _json

from . import _core

__all__ = [
    "analyze",
    "atom_cover",
    "enumerate_family",
    "maximal_d1_avoiding",
    "maximals",
    "ordinary",
    "registry",
    "smallest_containing",
    "tree_dot",
    "validate",
    "verify",
    "verify_pair",
]


def _point(p):
    return [p] if isinstance(p, int) else list(p)


def _points(pts):
    return [_point(p) for p in pts]


def analyze(d, gaps):
    """Full invariant profile (corner, Frobenius, PF/EH/CEH, slabs, flags)."""
    return _json.loads(_core.analyze_json(d, _points(gaps)))


def validate(d, gaps):
    """None when the complement is a semigroup, else the failing decomposition."""
    return _core.validate(d, _points(gaps))


def enumerate_family(corner, avoid=(), order="lex", dedup=True):
    """Tree of the family F(corner; avoid), root first, breadth first."""
    return _json.loads(_core.enumerate_json(_point(corner), _points(avoid), order, dedup))


def tree_dot(corner, avoid=(), order="lex", dedup=True):
    """The same tree rendered as Graphviz dot text."""
    return _core.tree_dot(_point(corner), _points(avoid), order, dedup)


def maximals(corner, avoid=(), order="lex"):
    """Maximal elements of F(corner; avoid), canonically sorted."""
    return _json.loads(_core.maximals_json(_point(corner), _points(avoid), order))


def verify(statement_id, bound):
    """Exhaustively check a registered statement up to the bound."""
    return _json.loads(_core.verify_json(statement_id, _point(bound)))


def verify_pair(g1, g2):
    """Single-instance check of the two-gap maximal-family statement."""
    return _json.loads(_core.verify_pair_json(_point(g1), _point(g2)))


def registry():
    """Registered statements as dicts with id, summary, expects_counterexamples."""
    return [
        {"id": i, "summary": s, "expects_counterexamples": x}
        for i, s, x in _core.registry()
    ]


def ordinary(corner):
    """Gap set of the ordinary semigroup: every nonzero point below the corner."""
    return _core.ordinary(_point(corner))


def smallest_containing(d, gaps, adjoin):
    """Gap set of the smallest semigroup containing the given one and the points."""
    return _core.smallest_containing(d, _points(gaps), _points(adjoin))


def maximal_d1_avoiding(g1, g2):
    """Gap sets of the maximal numerical semigroups with g1 and g2 as gaps."""
    return _core.maximal_d1_avoiding(g1, g2)


def atom_cover(corner):
    """Atoms of F(corner) with the forced gaps witnessing their maximality."""
    return _json.loads(_core.atom_cover_json(_point(corner)))
