import pytest

from hypermoment.canon import isomorphic
from hypermoment.core import HypergraphError, hyperpath, hyperstar
from hypermoment.enumerate import hypertrees, unicyclic
from hypermoment.order import Relation, s_compare, sort_family


def test_path_before_star_graphs():
    out = s_compare(hyperpath(3, 2), hyperstar(3, 2), 6)
    assert out.relation is Relation.BEFORE
    assert out.deciding_index == 4
    assert (out.first[4], out.second[4]) == (14, 18)


def test_path_before_star_m3():
    out = s_compare(hyperpath(4, 3), hyperstar(4, 3), 9)
    assert out.relation is Relation.BEFORE and out.deciding_index == 6
    back = s_compare(hyperstar(4, 3), hyperpath(4, 3), 9)
    assert back.relation is Relation.AFTER and back.deciding_index == 6


def test_self_comparison():
    out = s_compare(hyperstar(4, 3), hyperstar(4, 3))
    assert out.relation is Relation.EQUAL_UP_TO and out.deciding_index is None
    assert out.d_max == 9


def test_cross_size_is_decided_at_zero():
    out = s_compare(hyperpath(2, 3), hyperpath(3, 3))
    assert out.cross_size
    assert out.deciding_index == 0 and out.relation is Relation.BEFORE


def test_mixed_m_rejected():
    with pytest.raises(HypergraphError):
        s_compare(hyperpath(2, 3), hyperpath(2, 2))
    with pytest.raises(HypergraphError):
        sort_family([hyperpath(2, 3), hyperpath(2, 2)])


def test_sort_small_families():
    blocks = sort_family(hypertrees(3, 3), 9)
    assert isomorphic(blocks[0][0], hyperpath(3, 3))
    assert isomorphic(blocks[-1][0], hyperstar(3, 3))
    blocks = sort_family(hypertrees(4, 2), 6)
    assert len(blocks) == 3
    assert isomorphic(blocks[0][0], hyperpath(4, 2)) and isomorphic(blocks[-1][0], hyperstar(4, 2))
    assert sort_family([hyperstar(2, 3)]) == [[hyperstar(2, 3)]]
    assert sort_family([]) == []


def test_ties_are_grouped():
    blocks = sort_family(hypertrees(6, 2), 2)
    assert len(blocks) == 1 and len(blocks[0]) == 11


@pytest.mark.parametrize("family", ["trees", "unicyclic"])
def test_antisymmetry_and_transitivity(family):
    hs = hypertrees(5, 3) if family == "trees" else unicyclic(3, 2, 3)
    rel = {}
    for i, a in enumerate(hs):
        for j, b in enumerate(hs):
            r = s_compare(a, b).relation
            rel[i, j] = r
            if i == j:
                assert r is Relation.EQUAL_UP_TO
    flip = {Relation.BEFORE: Relation.AFTER, Relation.AFTER: Relation.BEFORE, Relation.EQUAL_UP_TO: Relation.EQUAL_UP_TO}
    n = len(hs)
    for i in range(n):
        for j in range(n):
            assert rel[j, i] is flip[rel[i, j]]
            for k in range(n):
                if rel[i, j] is Relation.BEFORE and rel[j, k] is Relation.BEFORE:
                    assert rel[i, k] is Relation.BEFORE


def test_trees_never_decided_before_2m():
    hs = hypertrees(5, 3)
    for a in hs:
        for b in hs:
            out = s_compare(a, b)
            if out.deciding_index is not None:
                assert out.deciding_index >= 6
