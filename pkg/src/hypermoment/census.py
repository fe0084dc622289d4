"""Counts of the small sub-hypergraph patterns used by the moment formulas.

A pattern occurrence is an edge subset whose induced edge hypergraph (on the
union of its vertices) is isomorphic to the pattern.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from itertools import combinations
from math import comb

from .canon import canonical_key
from .core import Hypergraph, HypergraphError, build, hyperpath, hyperstar, is_linear

__all__ = ["Pattern", "pattern_hypergraph", "count_pattern", "count_p2_by_degrees", "count_s3_by_degrees", "census"]


class Pattern(enum.Enum):
    P1 = ("path", 1)
    P2 = ("path", 2)
    P3 = ("path", 3)
    S3 = ("star", 3)

    @property
    def size(self) -> int:
        return self.value[1]


def pattern_hypergraph(p: Pattern, m: int) -> Hypergraph:
    kind, k = p.value
    return hyperpath(k, m) if kind == "path" else hyperstar(k, m)


@lru_cache(maxsize=None)
def _pattern_key(p: Pattern, m: int):
    return canonical_key(pattern_hypergraph(p, m))


def count_pattern(h: Hypergraph, p: Pattern) -> int:
    """Brute-force scan over all edge subsets of the pattern's size."""
    k = p.size
    if k == 1:
        return h.q
    target = _pattern_key(p, h.m)
    nverts = k * (h.m - 1) + 1
    count = 0
    for idx in combinations(range(h.q), k):
        sub = [h.edges[i] for i in idx]
        if len({v for e in sub for v in e}) != nverts:
            continue
        if canonical_key(build(h.m, sub)) == target:
            count += 1
    return count


def _require_linear(h: Hypergraph):
    if not is_linear(h):
        raise HypergraphError("degree formulas need a linear hypergraph")


def count_p2_by_degrees(h: Hypergraph) -> int:
    _require_linear(h)
    return sum(comb(d, 2) for d in h.degree_list)


def count_s3_by_degrees(h: Hypergraph) -> int:
    _require_linear(h)
    return sum(comb(d, 3) for d in h.degree_list)


def census(h: Hypergraph) -> dict[str, int]:
    return {p.name: count_pattern(h, p) for p in Pattern}
