"""Lexicographic comparison of moment sequences (the S-order).

Comparisons are truncated at ``d_max``: two hypergraphs whose sequences agree
up to that index are reported as ``EqualUpTo``, never as cospectral.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Sequence

from .canon import canonical_key
from .core import Hypergraph, HypergraphError
from .moments import MomentSequence, moment_sequence

__all__ = ["Relation", "OrderOutcome", "s_compare", "compare_sequences", "sort_family"]


class Relation(enum.Enum):
    BEFORE = "Before"
    AFTER = "After"
    EQUAL_UP_TO = "EqualUpTo"


@dataclass(frozen=True)
class OrderOutcome:
    relation: Relation
    deciding_index: int | None
    d_max: int
    cross_size: bool = False
    first: MomentSequence | None = None
    second: MomentSequence | None = None


def compare_sequences(a: MomentSequence, b: MomentSequence) -> tuple[Relation, int | None]:
    for (d, x), (_, y) in zip(a.entries, b.entries):
        if x != y:
            return (Relation.BEFORE if x < y else Relation.AFTER), d
    return Relation.EQUAL_UP_TO, None


def s_compare(h1: Hypergraph, h2: Hypergraph, d_max: int | None = None) -> OrderOutcome:
    if h1.m != h2.m:
        raise HypergraphError(f"cannot compare m={h1.m} with m={h2.m}")
    if d_max is None:
        d_max = 3 * h1.m
    a, b = moment_sequence(h1, d_max), moment_sequence(h2, d_max)
    rel, k = compare_sequences(a, b)
    return OrderOutcome(rel, k, d_max, h1.n != h2.n, a, b)


def sort_family(hs: Sequence[Hypergraph], d_max: int | None = None) -> list[list[Hypergraph]]:
    """Blocks of members with equal truncated sequences, in S-order.

    Members inside a block are ordered by canonical key.
    """
    if not hs:
        return []
    m = hs[0].m
    if any(h.m != m for h in hs):
        raise HypergraphError("family mixes edge cardinalities")
    if d_max is None:
        d_max = 3 * m
    seqs = [moment_sequence(h, d_max) for h in hs]
    keys = [canonical_key(h) for h in hs]

    def cmp(i, j):
        rel, _ = compare_sequences(seqs[i], seqs[j])
        if rel is Relation.BEFORE:
            return -1
        if rel is Relation.AFTER:
            return 1
        return (keys[i] > keys[j]) - (keys[i] < keys[j])

    idx = sorted(range(len(hs)), key=cmp_to_key(cmp))
    blocks: list[list[int]] = []
    for i in idx:
        if blocks and seqs[blocks[-1][0]].values == seqs[i].values:
            blocks[-1].append(i)
        else:
            blocks.append([i])
    return [[hs[i] for i in b] for b in blocks]
