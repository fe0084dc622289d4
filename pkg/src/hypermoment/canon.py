"""Canonical labelling and isomorphism of uniform hypergraphs.

The hypergraph is encoded as its vertex/edge incidence graph.  Colour
refinement is followed by an individualisation search over vertex cells; the
lexicographically least relabelled edge list over all search leaves is the
canonical form.  Automorphisms discovered at equal leaves prune sibling
branches that lie in the same orbit.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

from .core import Hypergraph

__all__ = ["CanonicalKey", "canonical_form", "canonical_key", "isomorphic"]


@dataclass(frozen=True, order=True)
class CanonicalKey:
    data: bytes

    def hex(self) -> str:
        return self.data.hex()


def _refine(colors: list[int], adj: list[list[int]]) -> list[int]:
    """Stable colour refinement; colour names depend only on signatures."""
    ncol = len(set(colors))
    while True:
        sigs = [(colors[x], tuple(sorted(colors[y] for y in adj[x]))) for x in range(len(colors))]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == ncol:
            return new
        colors, ncol = new, len(rank)


def _individualize(colors: list[int], x: int) -> list[int]:
    out = [2 * c + 1 for c in colors]
    out[x] = 2 * colors[x]
    return out


class _Search:
    def __init__(self, h: Hypergraph):
        self.h = h
        n = h.n
        self.adj = [[n + i for i in h.incidence[v]] for v in range(n)] + [list(e) for e in h.edges]
        self.best_cert = None
        self.best_lab = None
        self.autos: list[tuple[int, ...]] = []

    def run(self):
        colors = [0] * self.h.n + [1] * self.h.q
        self._visit(_refine(colors, self.adj), ())
        return self.best_cert, self.best_lab

    def _target_cell(self, colors):
        cells: dict[int, list[int]] = {}
        for v in range(self.h.n):
            cells.setdefault(colors[v], []).append(v)
        nontrivial = [(len(c), col) for col, c in cells.items() if len(c) > 1]
        if not nontrivial:
            return None
        _, col = min(nontrivial)
        return cells[col]

    def _leaf(self, colors):
        order = sorted(range(self.h.n), key=lambda v: colors[v])
        lab = [0] * self.h.n
        for i, v in enumerate(order):
            lab[v] = i
        cert = tuple(sorted(tuple(sorted(lab[v] for v in e)) for e in self.h.edges))
        if self.best_cert is None or cert < self.best_cert:
            self.best_cert, self.best_lab = cert, lab
        elif cert == self.best_cert:
            inv = [0] * self.h.n
            for v, i in enumerate(self.best_lab):
                inv[i] = v
            auto = tuple(inv[lab[v]] for v in range(self.h.n))
            if any(auto[v] != v for v in range(self.h.n)):
                self.autos.append(auto)

    def _orbit_rep(self, prefix, cell):
        parent = {v: v for v in cell}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.autos:
            if all(g[p] == p for p in prefix):
                for v in cell:
                    w = g[v]
                    if w in parent:
                        a, b = find(v), find(w)
                        if a != b:
                            parent[max(a, b)] = min(a, b)
        return find

    def _visit(self, colors, prefix):
        cell = self._target_cell(colors)
        if cell is None:
            self._leaf(colors)
            return
        done = []
        for x in cell:
            if done:
                find = self._orbit_rep(prefix, cell)
                if any(find(x) == find(y) for y in done):
                    continue
            done.append(x)
            self._visit(_refine(_individualize(colors, x), self.adj), prefix + (x,))


def canonical_labelling(h: Hypergraph) -> list[int]:
    """Vertex permutation taking ``h`` to its canonical form."""
    return _Search(h).run()[1]


def canonical_form(h: Hypergraph) -> Hypergraph:
    cert, _ = _Search(h).run()
    return Hypergraph(h.m, h.n, cert)


def canonical_key(h: Hypergraph) -> CanonicalKey:
    cert, _ = _Search(h).run()
    flat = [h.m, h.n, h.q] + [v for e in cert for v in e]
    return CanonicalKey(struct.pack(f">{len(flat)}H", *flat))


def isomorphic(h1: Hypergraph, h2: Hypergraph) -> bool:
    if (h1.m, h1.n, h1.q) != (h2.m, h2.n, h2.q):
        return False
    if sorted(h1.degree_list) != sorted(h2.degree_list):
        return False
    return canonical_key(h1) == canonical_key(h2)
