import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from corpus import corpus, simple_graphs
from graphpoly.canon import canonical_form, is_isomorphic
from graphpoly.graph import (EdgeKind, LabelledGraph, Multigraph, complete, complete_bipartite,
                             construct, cycle, disjoint_union, gray1, gray2, null, path, star)
from graphpoly.graphio import (GraphFormatError, format_edge_list, parse_edge_list,
                               parse_graph6, read_graph, to_graph6)
from graphpoly.limits import LIMITS, SizeLimitError


@st.composite
def multigraphs(draw, max_n=5, max_m=7):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(0, max_m))
    edges = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
                          min_size=m, max_size=m))
    return Multigraph(n, tuple(edges))


def relabel(g, perm):
    return Multigraph(g.n, tuple((perm[a], perm[b]) for a, b in g.edges))


def test_minor_examples():
    g = complete(3).contract_edge(0)
    assert g.n == 2 and g.edges == ((0, 1), (0, 1))
    assert complete(2).delete_edge(0) == null(2)
    assert path(3).identify_vertices(0, 2) == Multigraph(2, ((0, 1), (0, 1)))


def test_minor_errors():
    with pytest.raises(IndexError):
        complete(3).delete_edge(3)
    with pytest.raises(ValueError):
        path(3).identify_vertices(1, 1)
    with pytest.raises(ValueError):
        path(3).add_edge(0, 1)
    with pytest.raises(ValueError):
        path(3).add_edge(2, 2)


def test_contract_loop_is_delete():
    g = Multigraph(2, ((0, 0), (0, 1)))
    assert g.contract_edge(0) == g.delete_edge(0)


def test_merge_renumbering():
    g = Multigraph(4, ((0, 3), (1, 3), (2, 3)))
    assert g.contract_edge(1) == Multigraph(3, ((0, 1), (2, 1)))


def test_subset_stats_examples():
    s = cycle(4).subset_stats([0, 1])
    assert (s.size, s.nu, s.kappa, s.kcount, s.rank, s.dualrank) == (2, 3, 1, 2, 2, 1)
    assert tuple(complete(3).subset_stats([])) == (0, 0, 0, 3, 0, 0)
    assert tuple(complete(2).subset_stats([0])) == (1, 2, 1, 1, 1, 0)


@settings(max_examples=150)
@given(multigraphs(), st.data())
def test_subset_identities(g, data):
    X = data.draw(st.sets(st.integers(0, max(g.m - 1, 0)), max_size=g.m)) if g.m else set()
    s = g.subset_stats(X)
    assert s.kcount == s.kappa + g.n - s.nu
    assert s.rank == g.n - s.kcount == s.nu - s.kappa
    assert s.rank == oracles.rank(g.n, [g.edges[i] for i in X])
    rest = [i for i in range(g.m) if i not in X]
    assert s.dualrank == len(X) + g.rank(rest) - g.rank()


def test_double_dual_rank():
    for g in simple_graphs(5, connected=False):
        full = g.rank()
        for mask in range(1 << g.m):
            X = [i for i in range(g.m) if mask >> i & 1]
            rest = [i for i in range(g.m) if not mask >> i & 1]

            def dual(Y, Yc):
                return len(Y) + g.rank(Yc) - full

            dual_full = dual(list(range(g.m)), [])
            # rho**(X) = |X| + rho*(E - X) - rho*(E)
            assert len(X) + dual(rest, X) - dual_full == g.rank(X)


def test_classify_edge():
    assert complete(2).classify_edge(0) == EdgeKind.COLOOP
    assert Multigraph(1, ((0, 0),)).classify_edge(0) == EdgeKind.LOOP
    assert all(complete(3).classify_edge(i) == EdgeKind.ORDINARY for i in range(3))
    assert Multigraph(2, ((0, 1), (0, 1))).classify_edge(0) == EdgeKind.ORDINARY


def test_bridges_match_definition():
    for g in corpus():
        slow = {i for i in range(g.m) if g.edges[i][0] != g.edges[i][1]
                and g.delete_edge(i).num_components() > g.num_components()}
        assert g.bridges() == slow


def test_blocks_examples():
    bowtie = Multigraph(5, ((0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)))
    assert sorted(b.canonical_form() for b in bowtie.blocks()) == [complete(3).canonical_form()] * 2
    tree = Multigraph(5, ((0, 1), (1, 2), (1, 3), (3, 4)))
    assert all(is_isomorphic(b, complete(2)) for b in tree.blocks()) and len(tree.blocks()) == 4
    assert [b.canonical_form() for b in cycle(4).blocks()] == [cycle(4).canonical_form()]


def _two_connected(b):
    if b.m == 1:
        return True
    return b.is_connected() and all(b.delete_vertices([v]).is_connected() for v in range(b.n))


def test_blocks_partition_edges():
    for g in corpus():
        sets = g.block_edge_sets()
        assert sorted(i for s in sets for i in s) == list(range(g.m))
        for b in g.blocks():
            assert _two_connected(b)


def test_line_graph():
    assert is_isomorphic(star(3).line_graph(), complete(3))
    assert is_isomorphic(path(3).line_graph(), complete(2))
    assert is_isomorphic(cycle(4).line_graph(), cycle(4))
    with pytest.raises(ValueError, match="line graph restricted to simple graphs"):
        Multigraph(2, ((0, 1), (0, 1))).line_graph()


def test_isomorphism_examples():
    c4 = cycle(4)
    assert is_isomorphic(c4, relabel(c4, [2, 0, 3, 1]))
    assert not is_isomorphic(gray1(), gray2())
    assert not is_isomorphic(complete(3), path(3))


def test_canonical_form_relabelling_invariant():
    rng = random.Random(5)
    for g in corpus() + [gray1(), gray2(), complete(6)]:
        for _ in range(4):
            perm = list(range(g.n))
            rng.shuffle(perm)
            h = relabel(g, perm)
            edges = list(h.edges)
            rng.shuffle(edges)
            assert canonical_form(Multigraph(g.n, tuple(edges))) == canonical_form(g)


def _brute_iso(g, h):
    from itertools import permutations
    if g.n != h.n or g.m != h.m:
        return False
    target = sorted(h.edges)
    return any(sorted(relabel(g, p).edges) == target for p in permutations(range(g.n)))


def test_canonical_form_separates_like_brute_force():
    graphs = [g for g in corpus(4)] + list(simple_graphs(4, connected=False))
    for a in graphs:
        for b in graphs:
            if a.n == b.n and a.m == b.m:
                assert (canonical_form(a) == canonical_form(b)) == _brute_iso(a, b)


def test_canonical_limit():
    LIMITS.canon_n = 4
    with pytest.raises(SizeLimitError, match="canonicalisation limit exceeded"):
        canonical_form(complete(5))


@settings(max_examples=60)
@given(multigraphs(max_m=6), st.data())
def test_minor_commutation(g, data):
    if g.m < 2:
        return
    e, f = data.draw(st.lists(st.integers(0, g.m - 1), min_size=2, max_size=2, unique=True))
    # positions shift after removing the earlier index
    f2, e2 = (f - (f > e)), (e - (e > f))
    assert g.delete_edge(e).delete_edge(f2) == g.delete_edge(f).delete_edge(e2)
    assert is_isomorphic(g.contract_edge(e).contract_edge(f2), g.contract_edge(f).contract_edge(e2))


def test_constructors():
    g = construct("gray1")
    assert (g.n, g.m) == (6, 10)
    assert sum(1 for a, b in set(g.edges) if g.multiplicity(a, b) == 2) == 1
    assert g.multiplicity(0, 1) == 2 and gray2().multiplicity(2, 3) == 2
    c4 = construct("C", 4)
    assert (c4.n, c4.m) == (4, 4) and c4.degrees() == [2, 2, 2, 2]
    assert construct("null", 3) == Multigraph(3)
    assert complete_bipartite(2, 3).m == 6
    with pytest.raises(ValueError):
        construct("petersen")


def test_disjoint_union():
    g = disjoint_union(complete(3), path(2))
    assert (g.n, g.m, g.num_components()) == (5, 4, 2)


def test_labelled_graph_validation():
    with pytest.raises(ValueError, match="labels overlap"):
        LabelledGraph(complete(2), {0}, {0})
    with pytest.raises(ValueError):
        LabelledGraph(complete(2), {5})
    lg = LabelledGraph(path(3), {0}, {2})
    assert lg.unlabelled == [1] and not lg.is_total()


def test_edge_list_round_trip():
    text = "# a labelled path\n3 2\n0 1\n1 2\nC: 0\nU: 2\n"
    lg = parse_edge_list(text)
    assert lg.graph == path(3) and lg.C == {0} and lg.U == {2}
    assert parse_edge_list(format_edge_list(lg)) == lg
    assert parse_edge_list("0 0\n").graph == Multigraph(0)


@pytest.mark.parametrize("text", ["", "3\n", "2 1\n0\n", "2 2\n0 1\n", "2 1\n0 5\n",
                                  "2 1\n0 1\nX: 1\n", "a b\n"])
def test_edge_list_errors(text):
    with pytest.raises(GraphFormatError):
        parse_edge_list(text)


def test_graph6():
    assert to_graph6(complete(4)) == "C~"
    assert parse_graph6("C~") == complete(4)
    for g in simple_graphs(5, connected=False):
        assert parse_graph6(to_graph6(g)) == g
    with pytest.raises(ValueError):
        to_graph6(Multigraph(2, ((0, 1), (0, 1))))
    with pytest.raises(GraphFormatError):
        parse_graph6("C")


def test_read_graph(tmp_path):
    f = tmp_path / "k4.g6"
    f.write_text("C~\n")
    assert read_graph(f).graph == complete(4)
    f = tmp_path / "k3.edges"
    f.write_text(format_edge_list(complete(3)))
    assert read_graph(f).graph == complete(3)
