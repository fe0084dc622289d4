"""Uniform hypergraph values, named families and elementary invariants.

Vertices are always the contiguous labels ``0..n-1`` and every vertex lies in
at least one edge, so the vertex count is determined by the edge list.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "HypergraphError",
    "Hypergraph",
    "FamilySpec",
    "StructureClass",
    "build",
    "make_family",
    "hyperpath",
    "hyperstar",
    "hypercycle",
    "power",
    "family_f",
    "family_e",
    "coalesce",
    "permute",
    "degrees",
    "zagreb",
    "is_linear",
    "is_connected",
    "girth",
    "structure_class",
    "distance",
    "from_json",
    "to_json",
    "from_text",
    "to_text",
]


class HypergraphError(ValueError):
    """Invalid input: malformed hypergraph or an operation outside its domain."""


@dataclass(frozen=True)
class Hypergraph:
    """An immutable m-uniform hypergraph on vertices ``0..n-1``.

    ``edges`` keeps the order supplied by the constructor; each edge is a
    sorted tuple.  Use :func:`build` to validate and relabel arbitrary input.
    """

    m: int
    n: int
    edges: tuple[tuple[int, ...], ...]
    _edge_sets: tuple[frozenset, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.m < 2:
            raise HypergraphError(f"edge cardinality must be >= 2, got {self.m}")
        if not self.edges:
            raise HypergraphError("edge list is empty")
        sets = []
        seen = set()
        for e in self.edges:
            s = frozenset(e)
            if len(e) != self.m or len(s) != self.m:
                raise HypergraphError(f"edge {list(e)} does not have {self.m} distinct vertices")
            if s in seen:
                raise HypergraphError(f"duplicate edge {sorted(s)}")
            seen.add(s)
            sets.append(s)
        covered = set().union(*sets)
        if covered != set(range(self.n)):
            raise HypergraphError("vertex labels must be exactly 0..n-1 with no isolated vertices")
        object.__setattr__(self, "_edge_sets", tuple(sets))

    @property
    def q(self) -> int:
        return len(self.edges)

    @property
    def edge_sets(self) -> tuple[frozenset, ...]:
        return self._edge_sets

    @cached_property
    def degree_list(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return tuple(deg)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices incident to each vertex."""
        inc = [[] for _ in range(self.n)]
        for i, e in enumerate(self.edges):
            for v in e:
                inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    def sorted_edges(self) -> list[list[int]]:
        return sorted(list(e) for e in self.edges)

    def edge_index(self, edge: Iterable[int]) -> int:
        s = frozenset(edge)
        try:
            return self._edge_sets.index(s)
        except ValueError:
            raise HypergraphError(f"{sorted(s)} is not an edge") from None

    def __str__(self) -> str:
        return f"Hypergraph(m={self.m}, n={self.n}, edges={self.sorted_edges()})"


def build(m: int, edges: Sequence[Iterable[int]]) -> Hypergraph:
    """Validate ``edges`` and relabel their vertices to ``0..n-1``.

    Labels are mapped in increasing order, so input already on ``0..n-1``
    keeps its labels.
    """
    raw = [tuple(e) for e in edges]
    if not raw:
        raise HypergraphError("edge list is empty")
    labels = sorted({v for e in raw for v in e})
    relabel = {v: i for i, v in enumerate(labels)}
    return Hypergraph(m, len(labels), tuple(tuple(sorted(relabel[v] for v in e)) for e in raw))


# ---------------------------------------------------------------- families


@dataclass(frozen=True)
class FamilySpec:
    """Named family member.

    kind is one of ``hyperpath``, ``hyperstar`` (size ``q``), ``hypercycle``
    (size ``e``), ``power`` (``graph`` is a 2-uniform edge list), ``F`` and
    ``E`` (``e``, ``f``).
    """

    kind: str
    m: int
    q: int = 0
    e: int = 0
    f: int = 0
    graph: tuple[tuple[int, int], ...] = ()


def hyperpath(q: int, m: int) -> Hypergraph:
    """Loose path with ``q`` edges; consecutive edges share one vertex."""
    if q < 1:
        raise HypergraphError("hyperpath needs q >= 1 (the empty path has no edges)")
    step = m - 1
    return Hypergraph(m, q * step + 1, tuple(tuple(range(i * step, i * step + m)) for i in range(q)))


def hyperstar(q: int, m: int) -> Hypergraph:
    """``q`` edges sharing only the centre vertex 0."""
    if q < 1:
        raise HypergraphError("hyperstar needs q >= 1")
    step = m - 1
    return Hypergraph(
        m, q * step + 1, tuple((0,) + tuple(range(1 + i * step, 1 + (i + 1) * step)) for i in range(q))
    )


def hypercycle(e: int, m: int) -> Hypergraph:
    """Loose cycle with ``e`` edges.

    Vertex ``i`` (``0 <= i < e``) is the intersection of edges ``i`` and
    ``i+1 mod e``; edge ``i`` owns the core vertices ``e + i(m-2) ..``.
    """
    if e < 3:
        raise HypergraphError(f"hypercycle needs e >= 3, got {e}")
    k = m - 2
    edges = []
    for i in range(e):
        cores = tuple(range(e + i * k, e + (i + 1) * k))
        edges.append(tuple(sorted(((i - 1) % e, i) + cores)))
    return Hypergraph(m, e * (m - 1), tuple(edges))


def power(graph: Sequence[tuple[int, int]], m: int) -> Hypergraph:
    """m-power hypergraph: every graph edge gets ``m-2`` new degree-one vertices."""
    g = build(2, graph)
    k = m - 2
    edges = [tuple(sorted(e + tuple(range(g.n + i * k, g.n + (i + 1) * k)))) for i, e in enumerate(g.edges)]
    return Hypergraph(m, g.n + g.q * k, tuple(edges))


def family_f(e: int, f: int, m: int) -> Hypergraph:
    """Hypercycle with ``f`` pendant edges at the intersection vertex 0."""
    cyc = hypercycle(e, m)
    if f < 0:
        raise HypergraphError("f must be >= 0")
    if f == 0:
        return cyc
    return coalesce(cyc, [(0, hyperstar(f, m), 0)])


def family_e(e: int, f: int, m: int) -> Hypergraph:
    """Hypercycle with a hyperpath of ``f`` edges hanging from a core vertex.

    For m = 2 the cycle has no core vertices and the path hangs from vertex 0.
    """
    cyc = hypercycle(e, m)
    if f < 0:
        raise HypergraphError("f must be >= 0")
    if f == 0:
        return cyc
    root = e if m > 2 else 0
    return coalesce(cyc, [(root, hyperpath(f, m), 0)])


def make_family(spec: FamilySpec) -> Hypergraph:
    kind = spec.kind
    if kind == "hyperpath":
        return hyperpath(spec.q, spec.m)
    if kind == "hyperstar":
        return hyperstar(spec.q, spec.m)
    if kind == "hypercycle":
        return hypercycle(spec.e, spec.m)
    if kind == "power":
        return power(spec.graph, spec.m)
    if kind == "F":
        return family_f(spec.e, spec.f, spec.m)
    if kind == "E":
        return family_e(spec.e, spec.f, spec.m)
    raise HypergraphError(f"unknown family kind {kind!r}")


def coalesce(h0: Hypergraph, attach: Sequence[tuple[int, Hypergraph, int]]) -> Hypergraph:
    """Attach disjoint copies of components, identifying one vertex each.

    ``attach`` holds ``(vertex of h0, component, vertex of component)``.  The
    vertices of ``h0`` keep their labels; the remaining vertices of each
    component follow in attachment order.
    """
    if not attach:
        raise HypergraphError("attach list is empty")
    edges = [tuple(e) for e in h0.edges]
    nxt = h0.n
    for host_v, comp, comp_v in attach:
        if comp.m != h0.m:
            raise HypergraphError("components must have the same edge cardinality")
        if not 0 <= host_v < h0.n:
            raise HypergraphError(f"host vertex {host_v} out of range")
        if not 0 <= comp_v < comp.n:
            raise HypergraphError(f"component vertex {comp_v} out of range")
        mapping = {}
        for v in range(comp.n):
            if v == comp_v:
                mapping[v] = host_v
            else:
                mapping[v] = nxt
                nxt += 1
        edges.extend(tuple(sorted(mapping[v] for v in e)) for e in comp.edges)
    return Hypergraph(h0.m, nxt, tuple(edges))


def permute(h: Hypergraph, perm: Sequence[int]) -> Hypergraph:
    """Relabel vertex ``v`` as ``perm[v]``."""
    if sorted(perm) != list(range(h.n)):
        raise HypergraphError("not a permutation of the vertex set")
    return Hypergraph(h.m, h.n, tuple(tuple(sorted(perm[v] for v in e)) for e in h.edges))


# ------------------------------------------------------------- invariants


def degrees(h: Hypergraph) -> dict[int, int]:
    return dict(enumerate(h.degree_list))


def zagreb(h: Hypergraph) -> int:
    """Sum of squared vertex degrees."""
    return sum(d * d for d in h.degree_list)


def is_linear(h: Hypergraph) -> bool:
    # two edges share >= 2 vertices iff some vertex pair is covered twice
    seen = set()
    for e in h.edges:
        for i in range(len(e)):
            for j in range(i + 1, len(e)):
                pair = (e[i], e[j])
                if pair in seen:
                    return False
                seen.add(pair)
    return True


def _components(h: Hypergraph) -> int:
    parent = list(range(h.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in h.edges:
        r = find(e[0])
        for v in e[1:]:
            parent[find(v)] = r
    return len({find(v) for v in range(h.n)})


def is_connected(h: Hypergraph) -> bool:
    return _components(h) == 1


def girth(h: Hypergraph) -> float:
    """Length of the shortest loose hypercycle, ``math.inf`` if there is none.

    In a linear hypergraph such cycles are exactly the cycles of the
    vertex/edge incidence graph, whose length is twice the hypercycle length.
    """
    if not is_linear(h):
        raise HypergraphError("girth is only defined here for linear hypergraphs")
    # incidence graph: vertices 0..n-1, edge nodes n..n+q-1
    n = h.n
    adj = [list(h.incidence[v]) for v in range(n)]
    adj = [[n + i for i in a] for a in adj] + [list(e) for e in h.edges]
    best = math.inf
    for src in range(n, n + h.q):
        dist = {src: 0}
        par = {src: -1}
        dq = deque([src])
        while dq:
            x = dq.popleft()
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    par[y] = x
                    dq.append(y)
                elif par[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return math.inf if best == math.inf else best // 2


@dataclass(frozen=True)
class StructureClass:
    kind: str  # "hypertree", "linear-unicyclic" or "other"
    girth: int | None = None

    def __str__(self) -> str:
        return f"linear-unicyclic({self.girth})" if self.kind == "linear-unicyclic" else self.kind


def structure_class(h: Hypergraph) -> StructureClass:
    if not (is_connected(h) and is_linear(h)):
        return StructureClass("other")
    if h.n == h.q * (h.m - 1) + 1:
        return StructureClass("hypertree")
    if h.n == h.q * (h.m - 1):
        return StructureClass("linear-unicyclic", int(girth(h)))
    return StructureClass("other")


def vertex_distances(h: Hypergraph, src: int, *, banned_edges: Iterable[int] = ()) -> dict[int, int]:
    """BFS distances (in edges) from ``src`` to every reachable vertex."""
    banned = set(banned_edges)
    dist = {src: 0}
    dq = deque([src])
    while dq:
        x = dq.popleft()
        for ei in h.incidence[x]:
            if ei in banned:
                continue
            for y in h.edges[ei]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    dq.append(y)
    return dist


def distance(h: Hypergraph, u: int, v: int) -> int:
    for x in (u, v):
        if not 0 <= x < h.n:
            raise HypergraphError(f"vertex {x} out of range")
    d = vertex_distances(h, u).get(v)
    if d is None:
        raise HypergraphError(f"vertex {v} is unreachable from {u}")
    return d


# -------------------------------------------------------------- file i/o


def to_dict(h: Hypergraph) -> dict:
    return {"m": h.m, "n": h.n, "edges": h.sorted_edges()}


def to_json(h: Hypergraph) -> str:
    return json.dumps(to_dict(h))


def from_dict(obj: dict) -> Hypergraph:
    try:
        m = int(obj["m"])
        edges = [[int(v) for v in e] for e in obj["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise HypergraphError(f"malformed hypergraph object: {exc}") from None
    h = build(m, edges)
    if "n" in obj and int(obj["n"]) != h.n:
        raise HypergraphError(f"declared n={obj['n']} but edges cover {h.n} vertices")
    return h


def from_json(text: str) -> Hypergraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise HypergraphError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise HypergraphError("expected a JSON object")
    return from_dict(obj)


def to_text(h: Hypergraph) -> str:
    lines = [f"{h.m} {h.q}"] + [" ".join(map(str, e)) for e in h.sorted_edges()]
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Hypergraph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    try:
        m, q = (int(x) for x in rows[0])
        edges = [[int(x) for x in r] for r in rows[1:]]
    except (IndexError, ValueError) as exc:
        raise HypergraphError(f"malformed text hypergraph: {exc}") from None
    if len(edges) != q:
        raise HypergraphError(f"header announces {q} edges, found {len(edges)}")
    return build(m, edges)
