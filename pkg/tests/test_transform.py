import pytest

from hypermoment.canon import isomorphic
from hypermoment.census import Pattern, count_pattern
from hypermoment.core import Hypergraph, build, coalesce, family_e, family_f, hypercycle, hyperpath, hyperstar, zagreb
from hypermoment.enumerate import filter_binary, hypertrees, unicyclic
from hypermoment.transform import (
    PathShiftSpec,
    T1Spec,
    T2Spec,
    T4Spec,
    T5Spec,
    TransformError,
    apply,
    apply_t1,
    apply_t2,
    apply_t4,
    apply_t5,
    find_sites,
    path_shift,
    path_shift_sites,
    reduce_to_extremal,
    spec_from_dict,
    spec_to_dict,
)

EDGE = Hypergraph(3, 3, ((0, 1, 2),))


def test_t1_single_pendent_edge():
    res = apply_t1(hyperpath(3, 3), T1Spec((2, 3, 4), 2, 4))
    assert res.predicted == 2 and res.actual == 2 and res.holds
    assert res.after.q == 3 and res.after.n == 7


def test_t1_two_pendent_edges():
    h = build(3, [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 7, 8), (1, 9, 10)])
    res = apply_t1(h, T1Spec((0, 1, 2), 0, 1))
    assert res.predicted == 8 and res.actual == 8
    assert isomorphic(res.after, hyperstar(5, 3))


def test_t1_rejects_degree_one_target():
    with pytest.raises(TransformError, match="d\\(v\\)"):
        apply_t1(hyperstar(3, 3), T1Spec((0, 1, 2), 0, 1))


def test_t2_equal_degrees():
    res = apply_t2(hyperpath(3, 3), T2Spec(2, 4))
    assert res.predicted == 2 and res.holds


def test_t2_r_branch_larger_gap():
    # d(u) = 3 with r = 2 pendent edges, d(v) = 4 with t = 1
    h = build(3, [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 7, 8), (1, 9, 10), (1, 11, 12),
                  (9, 13, 14), (11, 15, 16)])
    res = apply_t2(h, T2Spec(0, 1))
    assert res.predicted == 2 * 2 * (2 + 4 - 3) and res.holds


def test_t2_t_branch():
    # d(u) = 4 with one pendent edge, d(v) = 2 with one pendent edge
    h = build(3, [(0, 1, 2), (0, 3, 4), (0, 5, 6), (0, 7, 8), (3, 9, 10), (5, 11, 12), (1, 13, 14)])
    res = apply_t2(h, T2Spec(0, 1))
    assert res.predicted == 2 * 1 * (1 + 4 - 2) and res.holds


def test_t2_needs_pendent_edges_on_both_sides():
    with pytest.raises(TransformError):
        apply_t2(hyperpath(4, 3), T2Spec(2, 4))


def test_t3_sites_decrease_by_twice_host_degree():
    seen = 0
    for h in hypertrees(5, 3) + unicyclic(3, 2, 3):
        for spec in find_sites(h, "T3"):
            res = apply(h, spec)
            deg_host = h.degree_list[spec.attach] - 2
            assert res.predicted == -2 * deg_host == res.actual
            seen += 1
    assert seen > 0


def test_t4_case_two_equal_degrees_rejected():
    # u and v both of host degree 1: branch through edge0 at u, nothing at v
    h = build(3, [(0, 1, 2), (0, 3, 4), (3, 5, 6), (1, 7, 8)])
    with pytest.raises(TransformError):
        apply_t4(h, T4Spec(0, 1, (0, 3, 4), 1))


def test_t4_sites_formula():
    seen = 0
    for h in hypertrees(5, 3):
        for spec in find_sites(h, "T4"):
            res = apply(h, spec)
            assert res.holds and res.actual < 0
            seen += 1
    assert seen > 0


def _cycle_with_paths(lengths, spots, e=3, m=3):
    cyc = hypercycle(e, m)
    return coalesce(cyc, [(c, hyperpath(k, m), 0) for c, k in zip(spots, lengths)])


def test_t5_two_single_edges():
    h = _cycle_with_paths((1, 1), (3, 4))
    sites = find_sites(h, "T5")
    assert sites
    for spec in sites:
        res = apply_t5(h, spec)
        assert res.holds and res.actual <= -1


def test_t5_lengths_two_and_one_on_four_cycle():
    cyc = hypercycle(4, 3)
    cores = [v for v in range(cyc.n) if cyc.degree_list[v] == 1]
    h = coalesce(cyc, [(cores[0], hyperpath(2, 3), 0), (cores[1], hyperpath(1, 3), 0)])
    for spec in find_sites(h, "T5"):
        res = apply_t5(h, spec)
        assert count_pattern(res.after, Pattern.P3) < count_pattern(h, Pattern.P3)


def test_t5_needs_two_paths():
    h = _cycle_with_paths((1,), (3,))
    edge1 = next(e for e in h.edges if 3 in e and max(e) >= 6)
    with pytest.raises(TransformError):
        apply_t5(h, T5Spec(3, edge1, 7))


def test_path_shift_single_edge_attachment():
    host = coalesce(EDGE, [(2, hyperpath(1, 3), 0)])
    res = path_shift(host, PathShiftSpec((0, 1, 2), 0, 1, 1, 1))
    assert res.p3_split - res.p3_merged >= 1
    assert res.split.q == res.merged.q == 4


def test_path_shift_r2_s1():
    host = coalesce(EDGE, [(2, hyperstar(2, 3), 0)])
    res = path_shift(host, PathShiftSpec((0, 1, 2), 0, 1, 2, 1))
    assert res.holds


@pytest.mark.parametrize("r,s", [(1, 0), (1, 2)])
def test_path_shift_rejects(r, s):
    host = coalesce(EDGE, [(2, hyperpath(1, 3), 0)])
    with pytest.raises(TransformError):
        path_shift(host, PathShiftSpec((0, 1, 2), 0, 1, r, s))


def test_path_shift_sites_listed():
    host = coalesce(EDGE, [(2, hyperpath(1, 3), 0)])
    assert ((0, 1, 2), 0, 1) in path_shift_sites(host)


def test_transformations_preserve_sizes():
    for h in hypertrees(5, 3) + unicyclic(3, 2, 3):
        for kind in ("T1", "T2", "T3", "T4"):
            for spec in find_sites(h, kind):
                g = apply(h, spec).after
                assert (g.n, g.q) == (h.n, h.q)


def test_spec_dict_roundtrip():
    spec = T4Spec(0, 1, (0, 3, 4), 1, None)
    assert spec_from_dict(spec_to_dict(spec)) == spec
    with pytest.raises(TransformError):
        spec_from_dict({"kind": "T9"})
    with pytest.raises(TransformError):
        spec_from_dict({"kind": "T1", "u": 1})


def test_star_ward_reduction_of_path():
    trace = reduce_to_extremal(hyperpath(4, 3), "star-ward")
    assert trace and isomorphic(trace[-1].result, hyperstar(4, 3))
    values = [trace[0].before] + [s.after for s in trace]
    assert values == sorted(set(values))


def test_star_is_terminal():
    assert reduce_to_extremal(hyperstar(4, 3), "star-ward") == []


def test_path_ward_reduction_of_binary_trees():
    for h in filter_binary(hypertrees(5, 3)):
        trace = reduce_to_extremal(h, "path-ward")
        final = trace[-1].result if trace else h
        assert isomorphic(final, hyperpath(5, 3))


def test_unicyclic_reductions():
    for h in unicyclic(3, 2, 3):
        star = reduce_to_extremal(h, "star-ward")
        assert isomorphic(star[-1].result if star else h, family_f(3, 2, 3))
        path = reduce_to_extremal(h, "path-ward")
        assert isomorphic(path[-1].result if path else h, family_e(3, 2, 3))
        for step in star:
            assert step.after > step.before
        for step in path:
            assert step.after < step.before


def test_reduce_rejects_other_inputs():
    with pytest.raises(TransformError):
        reduce_to_extremal(build(3, [(0, 1, 2), (3, 4, 5)]), "star-ward")
    with pytest.raises(TransformError):
        reduce_to_extremal(hyperpath(2, 3), "sideways")


def test_zagreb_changes_match_results():
    h = hyperpath(3, 3)
    res = apply_t1(h, T1Spec((2, 3, 4), 2, 4))
    assert zagreb(res.after) - zagreb(h) == res.actual
