import pytest

from ordtrees.tree_core import (
    MalformedInputError,
    MarkedTree,
    Tree,
    VertexStats,
    all_stats,
    enumerate_trees,
    enumerate_words,
    parent_indices,
    parse,
    serialize,
    stats,
    total_vertex_count,
)


def catalan_by_recurrence(n):
    cat = [1]
    for m in range(n):
        cat.append(sum(cat[i] * cat[m - i] for i in range(m + 1)))
    return cat[n]


def test_parse_empty_word_is_single_vertex():
    t = parse("")
    assert t.edges == 0 and t.children == ()


def test_parse_star():
    t = parse("()()()")
    assert t.outdegree == 3
    assert all(c.children == () for c in t.children)


@pytest.mark.parametrize("bad, offset", [("(()", 3), ("())", 2), ("(x)", 1), (")(", 0)])
def test_parse_rejects_malformed(bad, offset):
    with pytest.raises(MalformedInputError) as err:
        parse(bad)
    assert err.value.offset == offset


def test_serialize_examples():
    assert serialize(Tree()) == ""
    path = Tree([Tree([Tree([Tree()])])])
    assert serialize(path) == "((()))"


def test_tree_built_from_children_equals_parsed():
    t = Tree([Tree(), Tree([Tree(), Tree()]), Tree([Tree()])])
    assert t == parse("()(()())(())")
    assert hash(t) == hash(parse("()(()())(())"))
    assert t.children[1] == parse("()()")


@pytest.mark.parametrize("n", range(13))
def test_round_trip_and_vertex_counts(n):
    for t in enumerate_trees(n):
        assert parse(serialize(t)) == t
        words = [c.word for c in t.children]
        assert parse("".join(f"({w})" for w in words)) == t
        st = all_stats(t)
        assert len(st) == n + 1
        assert sum(s.outdegree for s in st) == n
        for v, s in enumerate(st):
            assert s.degree - s.outdegree == (1 if v else 0)
            assert s.is_leaf == (s.outdegree == 0)


def test_enumeration_small_cases():
    assert list(enumerate_words(0)) == [""]
    assert list(enumerate_words(3)) == ["((()))", "(()())", "(())()", "()(())", "()()()"]


@pytest.mark.parametrize("n", range(11))
def test_enumeration_is_strictly_increasing_and_complete(n):
    words = list(enumerate_words(n))
    assert len(words) == catalan_by_recurrence(n)
    assert all(a < b for a, b in zip(words, words[1:]))


def test_enumeration_n10():
    assert sum(1 for _ in enumerate_trees(10)) == 16796


def test_stats_examples():
    assert stats(parse("()()()"), 0) == VertexStats(
        level=0, degree=3, outdegree=3, elder_siblings=0, is_first_child=False, is_leaf=False)
    s = stats(parse("((()))"), 3)
    assert (s.level, s.degree, s.outdegree, s.is_leaf, s.is_first_child) == (3, 1, 0, True, True)
    s = stats(parse("()(())"), 1)
    assert (s.level, s.degree, s.is_leaf, s.is_first_child, s.elder_siblings) == (1, 1, True, True, 0)


def test_stats_elder_siblings():
    st = all_stats(parse("()()()"))
    assert [s.elder_siblings for s in st] == [0, 0, 1, 2]
    assert [s.is_first_child for s in st] == [False, True, False, False]


def test_stats_index_out_of_range():
    with pytest.raises(IndexError):
        stats(parse("()"), 2)


def test_parent_indices():
    assert parent_indices(parse("()(()())(())")) == [-1, 0, 0, 2, 2, 0, 5]


def test_preorder_and_subtree():
    t = parse("()(()())(())")
    assert [s.word for s in t.preorder()] == ["()(()())(())", "", "()()", "", "", "()", ""]
    assert t.subtree(5) == parse("()")


def test_total_vertex_count():
    assert total_vertex_count(3) == 20
    assert total_vertex_count(0) == 1
    assert total_vertex_count(5) == 252
    for n in range(8):
        assert total_vertex_count(n) == (n + 1) * catalan_by_recurrence(n)


def test_half_counts_by_enumeration():
    # first-children, non-first-children, leaves, non-leaves split the vertices in halves
    for n in range(1, 13):
        tallies = [0, 0, 0, 0]
        for t in enumerate_trees(n):
            for s in all_stats(t):
                tallies[0] += s.is_first_child
                tallies[1] += not s.is_first_child
                tallies[2] += s.is_leaf
                tallies[3] += not s.is_leaf
        assert len(set(tallies)) == 1
        assert 2 * tallies[0] == total_vertex_count(n)


def test_marked_tree_literal():
    m = MarkedTree.parse("()(())@2")
    assert m.tree == parse("()(())") and m.mark == 2
    assert str(m) == "()(())@2"
    for bad in ["()(())", "()@5", "()@x", "(@0"]:
        with pytest.raises(MalformedInputError):
            MarkedTree.parse(bad)
    with pytest.raises(IndexError):
        MarkedTree(parse("()"), 3)
