"""Edge-moving transformations and their monotonicity checks.

Each ``apply_*`` takes an explicit site description, validates every
precondition on the input hypergraph and returns the transformed hypergraph
together with the predicted and the observed change of the monitored
quantity (Zagreb index for T1-T4, number of three-edge loose paths for T5
and the path shift).  A precondition failure raises :class:`TransformError`;
a prediction that does not hold is reported through ``holds``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from itertools import combinations, permutations

from .canon import canonical_key, isomorphic
from .census import Pattern, count_pattern
from .core import (
    Hypergraph,
    HypergraphError,
    coalesce,
    hyperpath,
    is_linear,
    structure_class,
    vertex_distances,
    zagreb,
)
from .moments import cycle_edges

__all__ = [
    "TransformError",
    "T1Spec",
    "T2Spec",
    "T3Spec",
    "T4Spec",
    "T5Spec",
    "PathShiftSpec",
    "TransformResult",
    "PathShiftResult",
    "apply_t1",
    "apply_t2",
    "apply_t3",
    "apply_t4",
    "apply_t5",
    "path_shift",
    "apply",
    "spec_from_dict",
    "find_sites",
    "reduce_to_extremal",
]


class TransformError(HypergraphError):
    """A transformation precondition does not hold."""


Edge = tuple[int, ...]


@dataclass(frozen=True)
class T1Spec:
    """Move every pendent edge at ``u`` (other than ``edge``) over to ``v``."""

    edge: Edge
    u: int
    v: int
    kind: str = field(default="T1", init=False)


@dataclass(frozen=True)
class T2Spec:
    """Collect the pendent edges of ``u`` and ``v`` at the higher-degree one."""

    u: int
    v: int
    kind: str = field(default="T2", init=False)


@dataclass(frozen=True)
class T3Spec:
    """Binary hypertree hanging at ``attach`` through ``edge_k`` and ``edge_k1``;
    ``edge_k`` is re-hung at the pendent vertex ``pendent`` of the other side."""

    attach: int
    edge_k: Edge
    edge_k1: Edge
    pendent: int
    kind: str = field(default="T3", init=False)


@dataclass(frozen=True)
class T4Spec:
    """Binary branch through ``edge0`` at ``u`` is re-hung at ``v_t``.

    ``edge_t2`` names the first edge of the branch hanging at ``v``; ``None``
    means that branch is empty and then ``v_t`` must equal ``v``.
    """

    u: int
    v: int
    edge0: Edge
    v_t: int
    edge_t2: Edge | None = None
    kind: str = field(default="T4", init=False)


@dataclass(frozen=True)
class T5Spec:
    """Hyperpath at cycle core vertex ``attach`` (first edge ``edge1``) moves to
    the pendent vertex ``w1`` of another attached hyperpath."""

    attach: int
    edge1: Edge
    w1: int
    kind: str = field(default="T5", init=False)


@dataclass(frozen=True)
class PathShiftSpec:
    """Hang paths of ``r`` and ``s`` edges at ``u`` and ``v`` of ``edge``
    versus one path of ``r+s`` edges at ``u``."""

    edge: Edge
    u: int
    v: int
    r: int
    s: int
    kind: str = field(default="PathShift", init=False)


@dataclass(frozen=True)
class TransformResult:
    kind: str
    before: Hypergraph
    after: Hypergraph
    quantity: str  # "zagreb" or "P3"
    predicted: int  # exact delta for zagreb, an upper bound (-1) for P3
    actual: int

    @property
    def holds(self) -> bool:
        if self.quantity == "zagreb":
            return self.actual == self.predicted and self.actual != 0
        return self.actual <= self.predicted


@dataclass(frozen=True)
class PathShiftResult:
    split: Hypergraph  # paths of r and s edges at u and v
    merged: Hypergraph  # one path of r+s edges at u
    p3_split: int
    p3_merged: int

    @property
    def holds(self) -> bool:
        return self.p3_split > self.p3_merged


# ----------------------------------------------------------------- helpers


def _require(cond: bool, msg: str):
    if not cond:
        raise TransformError(msg)


def _edge(h: Hypergraph, edge) -> int:
    try:
        return h.edge_index(edge)
    except HypergraphError as exc:
        raise TransformError(str(exc)) from None


def _vertex(h: Hypergraph, v: int):
    _require(isinstance(v, int) and 0 <= v < h.n, f"vertex {v} out of range")


def _pendent_at(h: Hypergraph, ei: int, anchor: int) -> bool:
    deg = h.degree_list
    return all(deg[x] == 1 for x in h.edges[ei] if x != anchor)


def _pendent_edges_at(h: Hypergraph, u: int, exclude=()) -> list[int]:
    return [ei for ei in h.incidence[u] if ei not in exclude and _pendent_at(h, ei, u)]


def _is_pendent_vertex(h: Hypergraph, x: int, edges=None) -> bool:
    """Degree one and lying in an edge with m-1 degree-one vertices.

    With ``edges`` given, degrees are taken inside that edge subset.
    """
    deg = _degrees_in(h, edges) if edges is not None else h.degree_list
    if deg[x] != 1:
        return False
    inc = [ei for ei in h.incidence[x] if edges is None or ei in edges]
    return sum(1 for y in h.edges[inc[0]] if deg[y] == 1) >= h.m - 1


def _degrees_in(h: Hypergraph, edges) -> list[int]:
    deg = [0] * h.n
    for ei in edges:
        for x in h.edges[ei]:
            deg[x] += 1
    return deg


def _branch(h: Hypergraph, root: int, first: list[int]) -> tuple[set[int], set[int]]:
    """Edges and vertices hanging at ``root`` through the edges ``first``.

    Expansion never passes through ``root`` again.
    """
    edges = set(first)
    verts = {x for ei in first for x in h.edges[ei]}
    stack = [x for x in verts if x != root]
    while stack:
        x = stack.pop()
        for ei in h.incidence[x]:
            if ei in edges or root in h.edges[ei]:
                continue
            edges.add(ei)
            for y in h.edges[ei]:
                if y not in verts:
                    verts.add(y)
                    stack.append(y)
    return edges, verts


def _check_hanging_tree(h: Hypergraph, root: int, first: list[int], what: str, binary: bool = True):
    """Validate a hypertree hanging at ``root`` and return (edges, vertices)."""
    edges, verts = _branch(h, root, first)
    for ei in h.incidence[root]:
        if ei not in edges:
            _require(not (set(h.edges[ei]) & verts) - {root}, f"{what} is not pendant at vertex {root}")
    _require(len(verts) == len(edges) * (h.m - 1) + 1, f"{what} is not a hypertree")
    if binary:
        deg = _degrees_in(h, edges)
        _require(max(deg[x] for x in verts) <= 2, f"{what} is not a binary hypertree")
    return edges, verts


def _rebuild(h: Hypergraph, remove: list[int], add: list[Edge]) -> Hypergraph:
    keep = [e for i, e in enumerate(h.edges) if i not in set(remove)]
    try:
        return Hypergraph(h.m, h.n, tuple(keep) + tuple(tuple(sorted(e)) for e in add))
    except HypergraphError as exc:
        raise TransformError(f"transformation yields an invalid hypergraph: {exc}") from None


def _swap(edge: Edge, old: int, new: int) -> Edge:
    return tuple(sorted(new if x == old else x for x in edge))


def _zagreb_result(kind, h, g, predicted) -> TransformResult:
    return TransformResult(kind, h, g, "zagreb", predicted, zagreb(g) - zagreb(h))


# ---------------------------------------------------------- transformations


def apply_t1(h: Hypergraph, spec: T1Spec) -> TransformResult:
    e = _edge(h, spec.edge)
    u, v = spec.u, spec.v
    _require(u != v and u in h.edges[e] and v in h.edges[e], "u and v must be distinct vertices of the edge")
    others = [ei for ei in h.incidence[u] if ei != e]
    t = len(others)
    _require(t >= 1, "no pendent edges at u (need t >= 1)")
    for ei in others:
        _require(_pendent_at(h, ei, u), f"edge {list(h.edges[ei])} at u is not pendent (d(u) must be t+1)")
    dv = h.degree_list[v]
    _require(dv >= 2, f"d(v) = {dv}, need d(v) >= 2")
    g = _rebuild(h, others, [_swap(h.edges[ei], u, v) for ei in others])
    return _zagreb_result("T1", h, g, 2 * t * (dv - 1))


def apply_t2(h: Hypergraph, spec: T2Spec) -> TransformResult:
    u, v = spec.u, spec.v
    _vertex(h, u)
    _vertex(h, v)
    _require(u != v, "u and v must differ")
    pu = [ei for ei in _pendent_edges_at(h, u) if v not in h.edges[ei]]
    pv = [ei for ei in _pendent_edges_at(h, v) if u not in h.edges[ei]]
    r, t = len(pu), len(pv)
    _require(r >= 1 and t >= 1, f"need pendent edges at both vertices (r={r}, t={t})")
    du, dv = h.degree_list[u], h.degree_list[v]
    if dv >= du:
        _require(du > r, "u would lose all of its edges")
        g = _rebuild(h, pu, [_swap(h.edges[ei], u, v) for ei in pu])
        return _zagreb_result("T2", h, g, 2 * r * (r + dv - du))
    _require(dv > t, "v would lose all of its edges")
    g = _rebuild(h, pv, [_swap(h.edges[ei], v, u) for ei in pv])
    return _zagreb_result("T2", h, g, 2 * t * (t + du - dv))


def apply_t3(h1: Hypergraph, spec: T3Spec) -> TransformResult:
    a, vn = spec.attach, spec.pendent
    _vertex(h1, a)
    _vertex(h1, vn)
    ek, ek1 = _edge(h1, spec.edge_k), _edge(h1, spec.edge_k1)
    _require(ek != ek1 and a in h1.edges[ek] and a in h1.edges[ek1], "edge_k and edge_k1 must be distinct edges at attach")
    t_edges, t_verts = _check_hanging_tree(h1, a, [ek, ek1], "T")
    d_h = h1.degree_list[a] - 2
    _require(d_h >= 1, "the host H must not be a single vertex")
    _require(vn in t_verts and vn != a, "pendent vertex must belong to T")
    _require(_is_pendent_vertex(h1, vn, t_edges), f"vertex {vn} is not a pendent vertex of T")
    banned = [ei for ei in range(h1.q) if ei not in t_edges]
    u1 = min(x for x in h1.edges[ek] if x != a)
    u2 = min(x for x in h1.edges[ek1] if x != a)
    d1 = vertex_distances(h1, u1, banned_edges=banned)[vn]
    d2 = vertex_distances(h1, u2, banned_edges=banned)[vn]
    _require(d1 > d2, f"need d_T(u1, v_n) > d_T(u2, v_n), got {d1} <= {d2}")
    g = _rebuild(h1, [ek], [_swap(h1.edges[ek], a, vn)])
    return _zagreb_result("T3", h1, g, -2 * d_h)


def apply_t4(h1: Hypergraph, spec: T4Spec) -> TransformResult:
    u, v, vt = spec.u, spec.v, spec.v_t
    for x in (u, v, vt):
        _vertex(h1, x)
    _require(u != v, "u and v must differ")
    e0 = _edge(h1, spec.edge0)
    _require(u in h1.edges[e0], "edge0 must contain u")
    t1_edges, t1_verts = _check_hanging_tree(h1, u, [e0], "T1")
    _require(v not in t1_verts, "v lies inside T1")
    deg = h1.degree_list
    if spec.edge_t2 is not None:
        f0 = _edge(h1, spec.edge_t2)
        _require(v in h1.edges[f0], "edge_t2 must contain v")
        t2_edges, t2_verts = _check_hanging_tree(h1, v, [f0], "T2")
        _require(not (t1_verts & t2_verts), "T1 and T2 must be disjoint")
        dh_u, dh_v = deg[u] - 1, deg[v] - 1
        _require(vt in t2_verts and vt != v, "v_t must be a vertex of T2 other than v")
        _require(_is_pendent_vertex(h1, vt), f"v_t = {vt} is not a pendent vertex")
    else:
        dh_u, dh_v = deg[u] - 1, deg[v]
        _require(vt == v, "with an empty T2, v_t must be v")
    _require(dh_v >= 1, "v must keep an edge of H")
    _require(dh_u > 1, f"need d_H(u) > 1, got {dh_u}")
    _require(dh_u >= dh_v, f"need d_H(u) >= d_H(v), got {dh_u} < {dh_v}")
    if spec.edge_t2 is None:
        _require(dh_u > dh_v, "empty T2 with d_H(u) = d_H(v) gives no strict decrease")
        predicted = -(2 * dh_u - 2 * dh_v)
    else:
        predicted = -(2 * dh_u - 2)
    g = _rebuild(h1, [e0], [_swap(h1.edges[e0], u, vt)])
    return _zagreb_result("T4", h1, g, predicted)


def _cycle_with_paths(h: Hypergraph):
    """For a loose cycle with hyperpaths hung at core vertices, return
    (cycle edge set, {attachment vertex: (branch edges, branch vertices)})."""
    cls = structure_class(h)
    _require(cls.kind == "linear-unicyclic", f"expected a linear unicyclic hypergraph, got {cls}")
    cyc = set(cycle_edges(h))
    cyc_deg = _degrees_in(h, cyc)
    branches = {}
    for c in range(h.n):
        extra = [ei for ei in h.incidence[c] if ei not in cyc]
        if not extra or cyc_deg[c] == 0:
            continue
        _require(cyc_deg[c] == 1, f"cycle vertex {c} carrying a branch is not a core vertex")
        _require(len(extra) == 1, f"more than one branch edge at cycle vertex {c}")
        edges, verts = _check_hanging_tree(h, c, extra, f"branch at {c}")
        bdeg = _degrees_in(h, edges)
        _require(sum(1 for x in verts if bdeg[x] == 2) == len(edges) - 1, f"branch at {c} is not a hyperpath")
        branches[c] = (edges, verts)
    return cyc, branches


def apply_t5(h1: Hypergraph, spec: T5Spec) -> TransformResult:
    _require(h1.m >= 3, "T5 needs m >= 3")
    _, branches = _cycle_with_paths(h1)
    p = len(branches)
    _require(p >= 2, f"need at least two attached hyperpaths, found {p}")
    v1, w1 = spec.attach, spec.w1
    _require(v1 in branches, f"no hyperpath attached at {v1}")
    e1 = _edge(h1, spec.edge1)
    _require(e1 in branches[v1][0] and v1 in h1.edges[e1], "edge1 must be the first edge of the path at attach")
    host = [c for c, (_, verts) in branches.items() if w1 in verts and c != v1]
    _require(bool(host) and w1 != host[0], "w1 must lie on another attached hyperpath")
    _require(_is_pendent_vertex(h1, w1), f"w1 = {w1} is not a pendent vertex")
    g = _rebuild(h1, [e1], [_swap(h1.edges[e1], v1, w1)])
    before, after = count_pattern(h1, Pattern.P3), count_pattern(g, Pattern.P3)
    return TransformResult("T5", h1, g, "P3", -1, after - before)


def path_shift(h: Hypergraph, spec: PathShiftSpec) -> PathShiftResult:
    """Build both path configurations on the host edge and count loose 3-paths."""
    _require(h.m >= 3, "path shift needs m >= 3")
    r, s = spec.r, spec.s
    _require(s >= 1, f"need s >= 1, got {s}")
    _require(r >= s, f"need r >= s, got r={r}, s={s}")
    e = _edge(h, spec.edge)
    u, v = spec.u, spec.v
    edge = h.edges[e]
    _require(u != v and u in edge and v in edge, "u and v must be distinct vertices of the edge")
    deg = h.degree_list
    _require(deg[u] == 1 and deg[v] == 1, "u and v must have degree one")
    ws = [x for x in edge if deg[x] >= 2]
    _require(1 <= len(ws) <= h.m - 2, f"need 1..m-2 attached hypergraphs on the edge, found {len(ws)}")
    seen: set[int] = set()
    for w in ws:
        _, verts = _branch(h, w, [ei for ei in h.incidence[w] if ei != e])
        _require(not (verts & seen) and not (verts & set(edge)) - {w}, "attached hypergraphs must be disjoint")
        seen |= verts
    split = coalesce(h, [(u, hyperpath(r, h.m), 0), (v, hyperpath(s, h.m), 0)])
    merged = coalesce(h, [(u, hyperpath(r + s, h.m), 0)])
    return PathShiftResult(split, merged, count_pattern(split, Pattern.P3), count_pattern(merged, Pattern.P3))


_APPLY = {"T1": apply_t1, "T2": apply_t2, "T3": apply_t3, "T4": apply_t4, "T5": apply_t5}
_SPECS = {"T1": T1Spec, "T2": T2Spec, "T3": T3Spec, "T4": T4Spec, "T5": T5Spec, "PathShift": PathShiftSpec}


def apply(h: Hypergraph, spec):
    if spec.kind == "PathShift":
        return path_shift(h, spec)
    return _APPLY[spec.kind](h, spec)


def spec_from_dict(obj: dict):
    """Parse ``{"kind": "T1", "edge": [...], "u": .., "v": ..}`` and friends."""
    obj = dict(obj)
    kind = obj.pop("kind", None)
    if kind not in _SPECS:
        raise TransformError(f"unknown transformation kind {kind!r}")
    for key in ("edge", "edge_k", "edge_k1", "edge0", "edge1", "edge_t2"):
        if obj.get(key) is not None:
            obj[key] = tuple(sorted(int(x) for x in obj[key]))
    try:
        return _SPECS[kind](**obj)
    except TypeError as exc:
        raise TransformError(f"bad parameters for {kind}: {exc}") from None


def spec_to_dict(spec) -> dict:
    d = asdict(spec)
    return {k: (list(v) if isinstance(v, tuple) else v) for k, v in d.items()}


# ------------------------------------------------------------- site finder


def _candidates(h: Hypergraph, kind: str):
    edges = h.edges
    if kind == "T1":
        for e in edges:
            for u, v in permutations(e, 2):
                yield T1Spec(e, u, v)
    elif kind == "T2":
        for u, v in combinations(range(h.n), 2):
            yield T2Spec(u, v)
    elif kind == "T3":
        leaves = [x for x in range(h.n) if h.degree_list[x] == 1]
        for a in range(h.n):
            if h.degree_list[a] < 3:
                continue
            for ek, ek1 in permutations(h.incidence[a], 2):
                for vn in leaves:
                    yield T3Spec(a, edges[ek], edges[ek1], vn)
    elif kind == "T4":
        leaves = [x for x in range(h.n) if h.degree_list[x] == 1]
        for u in range(h.n):
            if h.degree_list[u] < 3:
                continue
            for e0 in h.incidence[u]:
                for v in range(h.n):
                    if v == u:
                        continue
                    yield T4Spec(u, v, edges[e0], v, None)
                    for f0 in h.incidence[v]:
                        for vt in leaves:
                            yield T4Spec(u, v, edges[e0], vt, edges[f0])
    elif kind == "T5":
        leaves = [x for x in range(h.n) if h.degree_list[x] == 1]
        for v1 in range(h.n):
            for e1 in h.incidence[v1]:
                for w1 in leaves:
                    yield T5Spec(v1, edges[e1], w1)
    else:
        raise TransformError(f"no site finder for {kind!r}")


def find_sites(h: Hypergraph, kind: str) -> list:
    """Every legal site of a transformation kind on ``h``."""
    if kind == "T5" and (h.m < 3 or structure_class(h).kind != "linear-unicyclic"):
        return []
    out = []
    for spec in _candidates(h, kind):
        try:
            _APPLY[kind](h, spec)
        except TransformError:
            continue
        out.append(spec)
    return out


def path_shift_sites(h: Hypergraph) -> list[tuple[Edge, int, int]]:
    """Host edges with two degree-one vertices and 1..m-2 attached parts."""
    out = []
    deg = h.degree_list
    for e in h.edges:
        ones = [x for x in e if deg[x] == 1]
        heavy = [x for x in e if deg[x] >= 2]
        if len(ones) >= 2 and 1 <= len(heavy) <= h.m - 2:
            for u, v in combinations(ones, 2):
                try:
                    path_shift(h, PathShiftSpec(e, u, v, 1, 1))
                except TransformError:
                    continue
                out.append((e, u, v))
    return out


# ---------------------------------------------------------------- reduction


@dataclass(frozen=True)
class Step:
    kind: str
    spec: object
    result: Hypergraph
    quantity: str
    before: int
    after: int


def _best(h: Hypergraph, kind: str):
    """Site with the largest predicted Zagreb change; ties by canonical key."""
    best = None
    for spec in find_sites(h, kind):
        res = _APPLY[kind](h, spec)
        rank = (-abs(res.predicted), canonical_key(res.after).data)
        if best is None or rank < best[0]:
            best = (rank, spec, res)
    return best


def _strip_path(h: Hypergraph, edge: Edge, x: int):
    """Branch hanging at ``x`` away from ``edge`` if it is a hyperpath with
    ``x`` at one end; returns (edges, length) or None."""
    e = h.edge_index(edge)
    first = [ei for ei in h.incidence[x] if ei != e]
    if len(first) != 1:
        return None
    edges, verts = _branch(h, x, first)
    if set(edge) & verts - {x} or len(verts) != len(edges) * (h.m - 1) + 1:
        return None
    bdeg = _degrees_in(h, edges)
    if max(bdeg[y] for y in verts) > 2 or sum(1 for y in verts if bdeg[y] == 2) != len(edges) - 1:
        return None
    return edges, len(edges)


def _path_shift_step(h: Hypergraph):
    """Merge two hyperpaths hanging from one edge into a single longer one."""
    deg = h.degree_list
    cyc = set(cycle_edges(h)) if structure_class(h).kind == "linear-unicyclic" else set()
    for ei, e in enumerate(h.edges):
        if ei in cyc:
            continue
        twos = [x for x in e if deg[x] == 2]
        if len(twos) < 3:
            continue
        hanging = {x: _strip_path(h, e, x) for x in twos}
        good = [x for x in twos if hanging[x] is not None]
        for u, v in combinations(good, 2):
            (eu, r), (ev, s) = hanging[u], hanging[v]
            if r < s:
                u, v, eu, ev, r, s = v, u, ev, eu, s, r
            drop = eu | ev
            keep = [h.edges[i] for i in range(h.q) if i not in drop]
            labels = sorted({y for k in keep for y in k})
            relabel = {y: i for i, y in enumerate(labels)}
            host = Hypergraph(h.m, len(labels), tuple(tuple(sorted(relabel[y] for y in k)) for k in keep))
            spec = PathShiftSpec(tuple(sorted(relabel[y] for y in e)), relabel[u], relabel[v], r, s)
            res = path_shift(host, spec)
            if not isomorphic(res.split, h):
                raise AssertionError("path shift reconstruction is not isomorphic to the input")
            return spec, res
    return None


def reduce_to_extremal(h: Hypergraph, mode: str) -> list[Step]:
    """Apply transformations until none is applicable.

    ``star-ward`` uses T1, then T2, each step raising the Zagreb index.
    ``path-ward`` uses T3, then T4, to reach maximum degree two (Zagreb index
    falls), then path shifts and T5 (count of loose 3-paths falls).
    """
    if mode not in ("star-ward", "path-ward"):
        raise TransformError(f"unknown mode {mode!r}")
    cls = structure_class(h)
    if cls.kind not in ("hypertree", "linear-unicyclic"):
        raise TransformError(f"reduction needs a hypertree or linear unicyclic input, got {cls}")
    if not is_linear(h):
        raise TransformError("reduction needs a linear hypergraph")
    trace: list[Step] = []
    cur = h
    phases = ["T1", "T2"] if mode == "star-ward" else ["T3", "T4"]
    while True:
        for kind in phases:
            best = _best(cur, kind)
            if best is not None:
                break
        if best is None:
            break
        _, spec, res = best
        if not res.holds:
            raise AssertionError(f"{kind} step violated its Zagreb prediction")
        trace.append(Step(kind, spec, res.after, "zagreb", zagreb(cur), zagreb(res.after)))
        cur = res.after
    if mode == "star-ward" or cur.m < 3:
        return trace
    while True:
        found = _path_shift_step(cur)
        if found is not None:
            spec, res = found
            if not res.holds:
                raise AssertionError("path shift did not reduce the 3-path count")
            trace.append(Step("PathShift", spec, res.merged, "P3", res.p3_split, res.p3_merged))
            cur = res.merged
            continue
        sites = find_sites(cur, "T5")
        if not sites:
            break
        res = apply_t5(cur, sites[0])
        if not res.holds:
            raise AssertionError("T5 did not reduce the 3-path count")
        before = count_pattern(cur, Pattern.P3)
        trace.append(Step("T5", sites[0], res.after, "P3", before, before + res.actual))
        cur = res.after
    return trace
