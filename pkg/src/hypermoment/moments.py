"""Spectral moments of uniform hypergraphs in exact arithmetic.

Three independent routes are provided:

* closed forms in terms of pattern counts (hypertrees up to order ``3m``,
  linear unicyclic hypergraphs at orders ``2m`` and ``3m``);
* the weighted connected-subgraph trace expansion for hypertrees and linear
  unicyclic hypergraphs, evaluated with :class:`fractions.Fraction`;
* for graphs (m = 2) the trace of the adjacency-matrix power.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterator

from .census import Pattern, count_pattern
from .core import Hypergraph, HypergraphError, StructureClass, structure_class

__all__ = [
    "DEFAULT_CAP_FACTOR",
    "MomentSequence",
    "s0",
    "s_low",
    "s_m",
    "tree_moment",
    "unicyclic_s2m",
    "unicyclic_s3m",
    "general_moment",
    "omega_cycle",
    "matrix_oracle",
    "moment_sequence",
    "cycle_edges",
]

#: general engine accepts d <= DEFAULT_CAP_FACTOR * m unless told otherwise
DEFAULT_CAP_FACTOR = 4


@dataclass(frozen=True)
class MomentSequence:
    m: int
    entries: tuple[tuple[int, int], ...]

    def __getitem__(self, d: int) -> int:
        return self.entries[d][1]

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def values(self) -> list[int]:
        return [v for _, v in self.entries]

    @property
    def d_max(self) -> int:
        return self.entries[-1][0]


def s0(h: Hypergraph) -> int:
    """Number of eigenvalues of the adjacency tensor, n(m-1)^(n-1)."""
    return h.n * (h.m - 1) ** (h.n - 1)


def s_low(h: Hypergraph, d: int) -> int:
    if not 1 <= d < h.m:
        raise HypergraphError(f"s_low needs 1 <= d < m, got d={d}")
    return 0


def s_m(h: Hypergraph) -> int:
    m = h.m
    return h.q * m ** (m - 1) * (m - 1) ** (h.n - m)


def _term(coef: int, base: int, exp: int, count: int) -> int:
    # zero counts come with negative exponents on tiny inputs (e.g. q=1)
    if count == 0:
        return 0
    if exp < 0:
        raise AssertionError("negative exponent with a nonzero pattern count")
    return coef * base**exp * count


def _class(h: Hypergraph, want: str) -> StructureClass:
    cls = structure_class(h)
    if cls.kind != want:
        raise HypergraphError(f"expected a {want} hypergraph, got {cls}")
    return cls


def tree_moment(t: Hypergraph, d: int) -> int:
    """Closed form for hypertrees at orders up to 3m."""
    _class(t, "hypertree")
    m, q = t.m, t.q
    if 1 <= d < 3 * m and d % m:
        return 0
    if d not in (m, 2 * m, 3 * m):
        raise HypergraphError(f"closed form only covers d in 1..{3 * m}, got d={d}")
    w = m - 1
    total = _term(m ** (m - 1), w, (q - 1) * w, q)
    if d == m:
        return total
    p2 = count_pattern(t, Pattern.P2)
    if d == 2 * m:
        return total + _term(2 * m ** (2 * m - 3), w, (q - 2) * w, p2)
    p3 = count_pattern(t, Pattern.P3)
    s3 = count_pattern(t, Pattern.S3)
    return (
        total
        + _term(6 * m ** (2 * m - 3), w, (q - 2) * w, p2)
        + _term(3 * m ** (3 * m - 5), w, (q - 3) * w, p3)
        + _term(6 * m ** (3 * m - 5), w, (q - 3) * w, s3)
    )


def unicyclic_s2m(u: Hypergraph) -> int:
    cls = _class(u, "linear-unicyclic")
    m, nv = u.m, u.n
    if m == 2 and cls.girth == 4:
        raise HypergraphError("at m=2 the order-4 closed form fails for girth 4 (walks around the 4-cycle)")
    w = m - 1
    return _term(m ** (m - 1), w, nv - m, u.q) + _term(
        2 * m ** (2 * m - 3), w, nv - 2 * m + 1, count_pattern(u, Pattern.P2)
    )


def unicyclic_s3m(u: Hypergraph) -> int:
    cls = _class(u, "linear-unicyclic")
    m, nv = u.m, u.n
    if m == 2 and cls.girth in (4, 6):
        raise HypergraphError(f"at m=2 the order-6 closed form fails for girth {cls.girth}")
    w = m - 1
    total = (
        _term(m ** (m - 1), w, nv - m, u.q)
        + _term(6 * m ** (2 * m - 3), w, nv + 1 - 2 * m, count_pattern(u, Pattern.P2))
        + _term(3 * m ** (3 * m - 5), w, nv + 2 - 3 * m, count_pattern(u, Pattern.P3))
        + _term(6 * m ** (3 * m - 5), w, nv + 2 - 3 * m, count_pattern(u, Pattern.S3))
    )
    if cls.girth == 3:
        total += 24 * m ** (3 * m - 6) * w ** (nv - 3 * m + 3)
    return total


# ------------------------------------------------------------ general engine


def omega_cycle(weights) -> Fraction:
    """Cyclic weight factor of a cycle-containing term.

    ``weights`` are the weights of the cycle edges in traversal order; index 0
    of the formula wraps to the last edge.  Any ``x`` that makes a factorial
    argument negative contributes nothing.
    """
    w = [int(x) for x in weights]
    if not w:
        raise HypergraphError("omega_cycle needs a nonempty weight sequence")
    if min(w) < 1:
        raise HypergraphError("cycle weights must be positive")
    n = len(w)
    wmin = min(w)
    total = Fraction(0)
    for x in range(2 * wmin + 1):
        lo = [w[i - 1] + wmin - x for i in range(n)]  # w[-1] is the wrap-around
        hi = [w[i] - wmin + x for i in range(n)]
        if min(lo) < 0 or min(hi) < 0:
            continue
        coef = Fraction(1)
        for i in range(n):
            coef *= Fraction(factorial(w[i]) ** 2, factorial(lo[i]) * factorial(hi[i]))
        up = [w[i] + wmin - x for i in range(n)]
        inner = 0
        for ell in range(n):
            p = 1
            for i in range(ell):
                p *= up[i]
            for i in range(ell + 1, n):
                p *= hi[i]
            inner += p
        total += coef * inner
    return total


def cycle_edges(u: Hypergraph) -> list[int]:
    """Edge indices of the unique hypercycle of ``u`` in traversal order."""
    cls = _class(u, "linear-unicyclic")
    n = u.n
    adj = [set(u.n + i for i in u.incidence[v]) for v in range(n)] + [set(e) for e in u.edges]
    alive = set(range(n + u.q))
    stack = [x for x in alive if len(adj[x]) <= 1]
    while stack:
        x = stack.pop()
        if x not in alive:
            continue
        alive.discard(x)
        for y in adj[x]:
            adj[y].discard(x)
            if y in alive and len(adj[y]) <= 1:
                stack.append(y)
        adj[x] = set()
    start = min(x for x in alive if x >= n)
    order = [start - n]
    prev, cur = None, start
    while True:
        v = next(y for y in sorted(adj[cur]) if y != prev)
        nxt = next(y for y in adj[v] if y != cur)
        if nxt == start:
            break
        order.append(nxt - n)
        prev, cur = v, nxt
    if len(order) != cls.girth:
        raise AssertionError("cycle extraction disagrees with girth")
    return order


def _connected_subsets(h: Hypergraph, max_size: int) -> Iterator[frozenset]:
    """All connected edge subsets with at most ``max_size`` edges."""
    nbr = [set() for _ in range(h.q)]
    for inc in h.incidence:
        for a in inc:
            nbr[a].update(inc)
    for a in range(h.q):
        nbr[a].discard(a)
    seen = set()
    frontier = [frozenset([i]) for i in range(h.q)]
    size = 1
    while frontier and size <= max_size:
        nxt = []
        for s in frontier:
            if s in seen:
                continue
            seen.add(s)
            yield s
            if size < max_size:
                ext = set().union(*(nbr[i] for i in s)) - s
                nxt.extend(s | {j} for j in ext)
        frontier = nxt
        size += 1


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _weighted_sum(h: Hypergraph, sub: list[int], k: int, cyc: list[int] | None) -> Fraction:
    m = h.m
    verts = sorted({v for i in sub for v in h.edges[i]})
    pos = {e: j for j, e in enumerate(sub)}
    total = Fraction(0)
    for omega in _compositions(k, len(sub)):
        dv = {v: 0 for v in verts}
        edge_part = Fraction(1)
        for e, wt in zip(sub, omega):
            for v in h.edges[e]:
                dv[v] += wt
            edge_part *= Fraction(wt ** (m - 1), factorial(wt) ** m)
        vert_part = 1
        for v in verts:
            vert_part *= factorial(dv[v] - 1)
        term = edge_part * vert_part
        if cyc is not None:
            term *= omega_cycle([omega[pos[e]] for e in cyc])
        total += term
    scale = Fraction(m) ** ((m - 2) * len(sub)) / Fraction(m - 1) ** len(verts)
    if cyc is not None:
        scale *= Fraction(2, m)
    return scale * total


def general_moment(u: Hypergraph, d: int, cap: int | None = None) -> int:
    """Moment from the weighted connected-subgraph expansion (m >= 3)."""
    cls = structure_class(u)
    if cls.kind not in ("hypertree", "linear-unicyclic"):
        raise HypergraphError(f"general engine needs a hypertree or linear unicyclic hypergraph, got {cls}")
    m = u.m
    if m < 3:
        raise HypergraphError("general engine is restricted to m >= 3")
    if cap is None:
        cap = DEFAULT_CAP_FACTOR * m
    if d < 1:
        raise HypergraphError("general engine needs d >= 1")
    if d > cap:
        raise HypergraphError(f"d={d} exceeds the general-engine cap {cap}")
    if d % m:
        return 0
    k = d // m
    cyc = cycle_edges(u) if cls.kind == "linear-unicyclic" else None
    cyc_set = set(cyc or ())
    acc = Fraction(0)
    for s in _connected_subsets(u, k):
        nverts = len({v for i in s for v in u.edges[i]})
        sub = sorted(s)
        if nverts == len(s) * (m - 1) + 1:
            acc += _weighted_sum(u, sub, k, None)
        elif cyc_set <= s:
            acc += _weighted_sum(u, sub, k, cyc)
        else:
            raise AssertionError("connected subset is neither a tree nor contains the cycle")
    value = d * Fraction(m - 1) ** u.n * acc
    if value.denominator != 1:
        raise AssertionError(f"non-integral moment {value} at d={d}")
    return value.numerator


# --------------------------------------------------------------- oracle


def matrix_oracle(g: Hypergraph, d: int) -> int:
    """trace(A^d) for a graph, i.e. the number of closed walks of length d."""
    if g.m != 2:
        raise HypergraphError("matrix oracle needs a 2-uniform hypergraph")
    if g.n > 64 or not 1 <= d <= 16:
        raise HypergraphError("matrix oracle limited to n <= 64 and 1 <= d <= 16")
    n = g.n
    a = [[0] * n for _ in range(n)]
    for x, y in g.edges:
        a[x][y] = a[y][x] = 1
    p = [row[:] for row in a]
    for _ in range(d - 1):
        p = [[sum(p[i][k] * a[k][j] for k in range(n) if p[i][k]) for j in range(n)] for i in range(n)]
    return sum(p[i][i] for i in range(n))


# ------------------------------------------------------------- sequences


def _moment_at(h: Hypergraph, cls: StructureClass, d: int, cap: int | None, cross_check: bool) -> int:
    m = h.m
    if d == 0:
        return s0(h)
    if d < m:
        return s_low(h, d)
    if d == m:
        return s_m(h)
    if cls.kind == "other":
        if m == 2:
            return matrix_oracle(h, d)
        raise HypergraphError(f"no engine for S_{d} of a hypergraph of class {cls}")
    if d % m:
        return 0
    value = None
    if cls.kind == "hypertree" and d <= 3 * m:
        value = tree_moment(h, d)
    elif cls.kind == "linear-unicyclic" and d in (2 * m, 3 * m):
        try:
            value = unicyclic_s2m(h) if d == 2 * m else unicyclic_s3m(h)
        except HypergraphError:
            if m != 2:
                raise
    if m == 2:
        oracle = matrix_oracle(h, d)
        if value is not None and oracle != value:
            raise AssertionError(f"closed form {value} disagrees with matrix oracle {oracle} at d={d}")
        return oracle
    if value is None:
        return general_moment(h, d, cap)
    if cross_check:
        other = general_moment(h, d, cap)
        if other != value:
            raise AssertionError(f"closed form {value} disagrees with general engine {other} at d={d}")
    return value


def moment_sequence(h: Hypergraph, d_max: int | None = None, *, cap: int | None = None,
                    cross_check: bool = False) -> MomentSequence:
    """S_0..S_{d_max}; ``d_max`` defaults to 3m.

    Closed forms are used where they apply and the general engine elsewhere;
    graphs go through the matrix oracle, checked against any closed form.
    """
    if d_max is None:
        d_max = 3 * h.m
    if d_max < 0:
        raise HypergraphError("d_max must be >= 0")
    cls = structure_class(h)
    entries = tuple((d, _moment_at(h, cls, d, cap, cross_check)) for d in range(d_max + 1))
    return MomentSequence(h.m, entries)
