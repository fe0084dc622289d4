"""Desk-scale checks of the extremal-ordering results.

Every check returns a :class:`Check`; suites are lists of checks sorted by
name so reports are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .canon import isomorphic
from .core import Hypergraph, coalesce, family_e, family_f, hypercycle, hyperpath, hyperstar, zagreb
from .enumerate import hypertrees, unicyclic
from .moments import (
    general_moment,
    matrix_oracle,
    moment_sequence,
    omega_cycle,
    s0,
    tree_moment,
    unicyclic_s2m,
    unicyclic_s3m,
)
from .order import sort_family
from .transform import PathShiftSpec, apply, apply_t5, find_sites, path_shift

__all__ = ["Check", "VerifyCaps", "SUITES", "run_suite"]


@dataclass
class Check:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)


@dataclass
class VerifyCaps:
    trees: dict[int, int] = field(default_factory=lambda: {2: 6, 3: 5})
    unicyclic: list[tuple[int, int]] = field(default_factory=lambda: [(3, 1), (3, 2), (4, 1), (4, 2)])
    engine_tree_q: int = 5
    engine_unicyclic_e: tuple[int, ...] = (3, 4, 5)
    engine_unicyclic_f: int = 2
    oracle_tree_q: int = 8
    transform_q: int = 5

    @classmethod
    def from_dict(cls, obj: dict) -> "VerifyCaps":
        caps = cls()
        if "trees" in obj:
            caps.trees = {int(k): int(v) for k, v in obj["trees"].items()}
        if "unicyclic" in obj:
            caps.unicyclic = [tuple(map(int, p)) for p in obj["unicyclic"]]
        for key in ("engine_tree_q", "engine_unicyclic_f", "oracle_tree_q", "transform_q"):
            if key in obj:
                setattr(caps, key, int(obj[key]))
        if "engine_unicyclic_e" in obj:
            caps.engine_unicyclic_e = tuple(int(x) for x in obj["engine_unicyclic_e"])
        return caps


def _extremes(blocks, first, last):
    ok_first = len(blocks[0]) == 1 and isomorphic(blocks[0][0], first)
    ok_last = len(blocks[-1]) == 1 and isomorphic(blocks[-1][0], last)
    flat = [max(h.degree_list) <= 2 for b in blocks for h in b]
    # binary members form a prefix of the order (ties never straddle the split)
    prefix = flat == sorted(flat, reverse=True)
    split_ok = all(len({max(h.degree_list) <= 2 for h in b}) == 1 for b in blocks)
    return ok_first, ok_last, prefix and split_ok


# ------------------------------------------------------------------ trees


def check_tree_order(caps: VerifyCaps) -> list[Check]:
    out = []
    for m, qmax in sorted(caps.trees.items()):
        for q in range(3, qmax + 1):
            blocks = sort_family(hypertrees(q, m), 3 * m)
            f, l_, b = _extremes(blocks, hyperpath(q, m), hyperstar(q, m))
            out.append(Check(f"trees.order.m{m}.q{q}", f and l_ and b,
                             {"blocks": len(blocks), "path_first": f, "star_last": l_, "binary_first": b}))
    return out


def check_tree_engines(caps: VerifyCaps) -> list[Check]:
    bad, n = [], 0
    for q in range(1, caps.engine_tree_q + 1):
        for t in hypertrees(q, 3):
            for d in (3, 6, 9):
                n += 1
                a, b = general_moment(t, d), tree_moment(t, d)
                if a != b:
                    bad.append({"edges": t.sorted_edges(), "d": d, "general": str(a), "closed": str(b)})
    return [Check("trees.engines.m3", not bad, {"comparisons": n, "mismatches": bad})]


# -------------------------------------------------------------- unicyclic


def check_unicyclic_order(caps: VerifyCaps) -> list[Check]:
    out = []
    for e, f in caps.unicyclic:
        blocks = sort_family(unicyclic(e, f, 3), 9)
        first, last, b = _extremes(blocks, family_e(e, f, 3), family_f(e, f, 3))
        out.append(Check(f"unicyclic.order.e{e}.f{f}", first and last and b,
                         {"blocks": len(blocks), "E_first": first, "F_last": last, "binary_first": b}))
    return out


def check_unicyclic_engines(caps: VerifyCaps) -> list[Check]:
    bad, n = [], 0
    for e in caps.engine_unicyclic_e:
        for f in range(caps.engine_unicyclic_f + 1):
            for u in unicyclic(e, f, 3):
                n += 1
                g6, g9 = general_moment(u, 6), general_moment(u, 9)
                c6, c9 = unicyclic_s2m(u), unicyclic_s3m(u)
                if (g6, g9) != (c6, c9):
                    bad.append({"edges": u.sorted_edges(), "general": [str(g6), str(g9)], "closed": [str(c6), str(c9)]})
    return [Check("unicyclic.engines.m3", not bad, {"hypergraphs": n, "mismatches": bad})]


def check_zagreb_last(q: int = 5, m: int = 3) -> list[Check]:
    vals = {l_: zagreb(family_f(l_, q - l_, m)) for l_ in range(3, q + 1)}
    poly = {l_: l_ * l_ - l_ - 2 * q * l_ + q * m + 3 * q + q * q for l_ in vals}
    best = max(vals.values())
    unique = [l_ for l_, v in vals.items() if v == best] == [3]
    return [Check(f"unicyclic.zagreb_last.q{q}", vals == poly and unique,
                  {"zagreb": {str(k): str(v) for k, v in vals.items()}, "unique_max_at_3": unique})]


def check_anchors() -> list[Check]:
    c3 = hypercycle(3, 3)
    om = omega_cycle((1, 1, 1))
    closed = (moment_sequence(c3, 3)[3], unicyclic_s2m(c3), unicyclic_s3m(c3))
    general = tuple(general_moment(c3, d) for d in (3, 6, 9))
    ok = closed == general == (216, 540, 1836)
    return [
        Check("anchors.omega_111", om == 4, {"value": str(om)}),
        Check("anchors.c3_m3", ok, {"closed": [str(x) for x in closed], "general": [str(x) for x in general]}),
    ]


# ---------------------------------------------------------------- oracles


def check_oracles(caps: VerifyCaps) -> list[Check]:
    bad, n = [], 0
    for q in range(1, caps.oracle_tree_q + 1):
        for t in hypertrees(q, 2):
            for d in (2, 4, 6):
                n += 1
                if tree_moment(t, d) != matrix_oracle(t, d):
                    bad.append({"edges": t.sorted_edges(), "d": d})
    out = [Check("oracles.trees.m2", not bad, {"comparisons": n, "mismatches": bad})]
    bad, n = [], 0
    for e in range(3, 9):
        for f in range(0, 9 - e):
            for u in unicyclic(e, f, 2):
                if e >= 5 or e == 3:
                    n += 1
                    if unicyclic_s2m(u) != matrix_oracle(u, 4):
                        bad.append({"edges": u.sorted_edges(), "d": 4})
                if e in (3, 5) or e >= 7:
                    n += 1
                    if unicyclic_s3m(u) != matrix_oracle(u, 6):
                        bad.append({"edges": u.sorted_edges(), "d": 6})
    out.append(Check("oracles.unicyclic.m2", not bad, {"comparisons": n, "mismatches": bad}))
    tri, c5 = hypercycle(3, 2), hypercycle(5, 2)
    out.append(Check("oracles.anchors.m2", matrix_oracle(tri, 6) == 66 == unicyclic_s3m(tri)
                     and matrix_oracle(c5, 4) == 30 == unicyclic_s2m(c5), {}))
    return out


def check_zero_pattern(samples: int = 50, seed: int = 0) -> list[Check]:
    rng = random.Random(seed)
    pool = [t for q in range(1, 6) for t in hypertrees(q, 3)]
    pool += [u for e in (3, 4) for f in range(0, 3) for u in unicyclic(e, f, 3)]
    bad = []
    for _ in range(samples):
        h = rng.choice(pool)
        seq = moment_sequence(h, 8)
        if any(seq[d] != 0 for d in (1, 2, 4, 5, 7, 8)) or seq[0] != h.n * 2 ** (h.n - 1) or seq[0] != s0(h):
            bad.append(h.sorted_edges())
    return [Check("oracles.zero_pattern.m3", not bad, {"samples": samples, "failures": bad})]


# ------------------------------------------------------------- transforms


def check_transforms(caps: VerifyCaps) -> list[Check]:
    pool = [t for q in range(1, caps.transform_q + 1) for t in hypertrees(q, 3)]
    pool += [u for e in range(3, caps.transform_q + 1) for f in range(0, caps.transform_q - e + 1)
             for u in unicyclic(e, f, 3)]
    out = []
    for kind, sign in (("T1", 1), ("T2", 1), ("T3", -1), ("T4", -1)):
        n, bad = 0, []
        for h in pool:
            for spec in find_sites(h, kind):
                res = apply(h, spec)
                n += 1
                if not (res.holds and res.actual * sign > 0):
                    bad.append({"edges": h.sorted_edges(), "site": repr(spec)})
        out.append(Check(f"transforms.{kind}", not bad and n > 0, {"sites": n, "failures": bad}))
    n, bad = 0, []
    for h in t5_instances():
        for spec in find_sites(h, "T5"):
            n += 1
            if not apply_t5(h, spec).holds:
                bad.append({"edges": h.sorted_edges(), "site": repr(spec)})
    out.append(Check("transforms.T5", not bad and n >= 100, {"instances": n, "failures": bad}))
    n, bad = 0, []
    for h, spec in path_shift_instances():
        n += 1
        if not path_shift(h, spec).holds:
            bad.append({"edges": h.sorted_edges(), "site": repr(spec)})
    out.append(Check("transforms.path_shift", not bad and n >= 100, {"instances": n, "failures": bad}))
    return out


def t5_instances():
    """Loose cycles carrying two or more hyperpaths at distinct core vertices."""
    for m in (3, 4):
        for e in (3, 4):
            cyc = hypercycle(e, m)
            cores = [v for v in range(cyc.n) if cyc.degree_list[v] == 1]
            for lengths in ((1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (1, 1, 1), (2, 1, 1)):
                for spots in _spread(cores, len(lengths)):
                    yield coalesce(cyc, [(c, hyperpath(k, m), 0) for c, k in zip(spots, lengths)])


def _spread(cores, k):
    yield tuple(cores[:k])
    yield tuple(cores[-k:])
    if len(cores) >= 2 * k:
        yield tuple(cores[::2][:k])


def path_shift_instances():
    """Host edges with 1..m-2 attached parts and two free degree-one vertices."""
    for m in (3, 4, 5):
        parts = [hyperpath(1, m), hyperpath(2, m), hyperstar(2, m), hyperstar(3, m), hypercycle(3, m)]
        edge = Hypergraph(m, m, (tuple(range(m)),))
        for p in range(1, m - 1):
            for comps in _choose_parts(parts, p):
                host = coalesce(edge, [(2 + i, c, 0) for i, c in enumerate(comps)])
                for r in range(1, 4):
                    for s in range(1, r + 1):
                        yield host, PathShiftSpec(tuple(range(m)), 0, 1, r, s)


def _choose_parts(options, p):
    if p == 1:
        for o in options:
            yield (o,)
    else:
        for o in options[:2]:
            for rest in _choose_parts(options, p - 1):
                yield (o,) + rest


SUITES = {
    "trees": lambda caps: check_tree_order(caps) + check_tree_engines(caps),
    "unicyclic": lambda caps: (check_unicyclic_order(caps) + check_unicyclic_engines(caps)
                               + check_zagreb_last() + check_anchors()),
    "transforms": check_transforms,
    "oracles": lambda caps: check_oracles(caps) + check_zero_pattern(),
}


def run_suite(name: str, caps: VerifyCaps | None = None) -> list[Check]:
    caps = caps or VerifyCaps()
    names = sorted(SUITES) if name == "all" else [name]
    checks = []
    for s in names:
        checks.extend(SUITES[s](caps))
    return sorted(checks, key=lambda c: c.name)
