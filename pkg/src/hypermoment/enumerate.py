"""Isomorphism-free generation of hypertree and linear unicyclic families.

Members are grown one edge at a time: each new edge meets the current
hypergraph in exactly one vertex and brings ``m-1`` fresh vertices.  Starting
from a single edge this yields every hypertree; starting from the loose cycle
``C_e`` it yields every linear unicyclic hypergraph of girth ``e``.
Duplicates are removed by canonical key and output is in ascending key order.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .canon import canonical_form, canonical_key
from .core import Hypergraph, HypergraphError, hypercycle

__all__ = [
    "DEFAULT_CAPS",
    "FamilyQuery",
    "caps",
    "enumerate_family",
    "filter_binary",
    "hypertrees",
    "unicyclic",
]

#: largest edge count generated per edge cardinality
DEFAULT_CAPS = {2: 9, 3: 7, 4: 6}
_FALLBACK_CAP = 5


def caps() -> dict[int, int]:
    """Enumeration caps, overridable as ``HYPERMOMENT_CAPS="2:9,3:7"``."""
    out = dict(DEFAULT_CAPS)
    raw = os.environ.get("HYPERMOMENT_CAPS", "").strip()
    if raw:
        try:
            for item in raw.split(","):
                m, q = item.split(":")
                out[int(m)] = int(q)
        except ValueError:
            raise HypergraphError(f"bad HYPERMOMENT_CAPS value {raw!r}") from None
    return out


def _check_cap(m: int, q: int, limits: dict[int, int] | None):
    limit = (limits or caps()).get(m, _FALLBACK_CAP)
    if q > limit:
        raise HypergraphError(f"q={q} exceeds the enumeration cap {limit} for m={m}")


def _grow(seeds: list[Hypergraph], steps: int) -> list[Hypergraph]:
    layer = {canonical_key(h): canonical_form(h) for h in seeds}
    for _ in range(steps):
        nxt = {}
        for h in layer.values():
            m, n = h.m, h.n
            for v in range(n):
                new = h.edges + ((v,) + tuple(range(n, n + m - 1)),)
                g = Hypergraph(m, n + m - 1, new)
                k = canonical_key(g)
                if k not in nxt:
                    nxt[k] = canonical_form(g)
        layer = nxt
    return [layer[k] for k in sorted(layer)]


def hypertrees(q: int, m: int, limits: dict[int, int] | None = None) -> list[Hypergraph]:
    if q < 1:
        raise HypergraphError("hypertrees need q >= 1")
    _check_cap(m, q, limits)
    seed = Hypergraph(m, m, (tuple(range(m)),))
    return _grow([seed], q - 1)


def unicyclic(e: int, f: int, m: int, limits: dict[int, int] | None = None) -> list[Hypergraph]:
    """Linear unicyclic hypergraphs with girth ``e`` and ``e+f`` edges."""
    if e < 3 or f < 0:
        raise HypergraphError("unicyclic family needs e >= 3 and f >= 0")
    _check_cap(m, e + f, limits)
    return _grow([hypercycle(e, m)], f)


def filter_binary(hs) -> list[Hypergraph]:
    """Members whose maximum degree is at most 2."""
    return [h for h in hs if max(h.degree_list) <= 2]


@dataclass(frozen=True)
class FamilyQuery:
    """``family`` is one of hypertrees, binary_hypertrees, unicyclic,
    unicyclic_binary (these use ``e`` and ``f``) or unicyclic_all (``q``)."""

    family: str
    m: int
    q: int = 0
    e: int = 0
    f: int = 0


def enumerate_family(fq: FamilyQuery, limits: dict[int, int] | None = None) -> list[Hypergraph]:
    fam = fq.family
    if fam == "hypertrees":
        return hypertrees(fq.q, fq.m, limits)
    if fam == "binary_hypertrees":
        return filter_binary(hypertrees(fq.q, fq.m, limits))
    if fam == "unicyclic":
        return unicyclic(fq.e, fq.f, fq.m, limits)
    if fam == "unicyclic_binary":
        return filter_binary(unicyclic(fq.e, fq.f, fq.m, limits))
    if fam == "unicyclic_all":
        if fq.q < 3:
            raise HypergraphError("unicyclic_all needs q >= 3")
        out = []
        for e in range(3, fq.q + 1):
            out.extend(unicyclic(e, fq.q - e, fq.m, limits))
        return sorted(out, key=canonical_key)
    raise HypergraphError(f"unknown family {fam!r}")
