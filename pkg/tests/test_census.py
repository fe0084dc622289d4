import pytest

from hypermoment.census import Pattern, census, count_p2_by_degrees, count_pattern, count_s3_by_degrees, pattern_hypergraph
from hypermoment.core import HypergraphError, build, family_e, family_f, hypercycle, hyperpath, hyperstar
from hypermoment.enumerate import hypertrees, unicyclic


def test_pattern_shapes():
    assert pattern_hypergraph(Pattern.P3, 3).n == 7
    assert pattern_hypergraph(Pattern.S3, 4).n == 10
    assert Pattern.P2.size == 2


def test_census_of_named_members():
    assert census(hyperpath(4, 3)) == {"P1": 4, "P2": 3, "P3": 2, "S3": 0}
    assert census(hyperstar(4, 3)) == {"P1": 4, "P2": 6, "P3": 0, "S3": 4}
    assert census(family_f(3, 2, 3)) == {"P1": 5, "P2": 8, "P3": 4, "S3": 4}
    assert census(family_e(3, 2, 3)) == {"P1": 5, "P2": 5, "P3": 3, "S3": 0}


def test_triangle_has_no_three_path():
    # the three edges of a loose triangle share vertices pairwise; not a path
    assert count_pattern(hypercycle(3, 3), Pattern.P3) == 0
    assert count_pattern(hypercycle(4, 3), Pattern.P3) == 4


def test_graph_counts():
    # the path on 5 vertices has two paths with three edges
    assert count_pattern(hyperpath(4, 2), Pattern.P3) == 2
    # K4 has 12 paths of length three and 4 claws
    k4 = build(2, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    assert count_pattern(k4, Pattern.P3) == 12
    assert count_pattern(k4, Pattern.S3) == 4


@pytest.mark.parametrize("m", [2, 3, 4])
def test_degree_formulas_agree_on_families(m):
    hs = hypertrees(5, m) + unicyclic(3, 2, m) + unicyclic(4, 1, m)
    for h in hs:
        assert count_p2_by_degrees(h) == count_pattern(h, Pattern.P2)
        assert count_s3_by_degrees(h) == count_pattern(h, Pattern.S3)


def test_degree_formulas_need_linear():
    h = build(3, [(0, 1, 2), (0, 1, 3)])
    with pytest.raises(HypergraphError):
        count_p2_by_degrees(h)
    with pytest.raises(HypergraphError):
        count_s3_by_degrees(h)
