import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import edges_strategy
from oracles import brute_kappa_clique_cuts, brute_vertex_connectivity, is_clique
from idealconn.connectivity import is_ideally_connected
from idealconn.decomposition import (
    CliqueCut,
    all_kappa_clique_cuts,
    check_lemma_cut_pairs,
    check_lemma_high_degree,
    check_lemma_subgraphs_ideal,
    check_lemma_u_s,
    check_unique_cut,
    chordal_structure,
    find_kappa_clique_cut,
    find_min_vertex_cut,
    find_simplicial,
    glue_along_clique,
    s_subgraphs,
    verify_structure_theorem,
)
from idealconn.errors import DomainError, PreconditionError, ValidationError
from idealconn.generators import fig1_threshold16, fig4_split_counterexample, random_chordal
from idealconn.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    induced_subgraph,
    path_graph,
    star_graph,
    two_k2,
)
from idealconn.recognizers import recognize_chordal


def two_k4_on_triangle():
    return glue_along_clique([(complete_graph(4), [0, 1, 2]), (complete_graph(4), [0, 1, 2])], 3)


def bowtie():
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def glued_cycles():
    """K4 on s1 = 0, s2 = 1 with a 4-, 5- and 3-cycle glued along the edge s1 s2."""
    parts = [(complete_graph(4), [0, 1])] + [(cycle_graph(k), [0, 1]) for k in (4, 5, 3)]
    return glue_along_clique(parts, 2)


def cut(*vs):
    return CliqueCut(frozenset(vs))


# --- cuts -----------------------------------------------------------------------------


def test_find_min_vertex_cut_examples():
    assert find_min_vertex_cut(path_graph(3)) == {1}
    assert find_min_vertex_cut(cycle_graph(4)) in ({0, 2}, {1, 3})
    assert find_min_vertex_cut(two_k4_on_triangle()) == {0, 1, 2}


@pytest.mark.parametrize("g", [complete_graph(4), two_k2(), Graph.empty(0)])
def test_find_min_vertex_cut_domain(g):
    with pytest.raises(DomainError):
        find_min_vertex_cut(g)


def test_find_kappa_clique_cut_examples():
    assert find_kappa_clique_cut(cycle_graph(4)) is None
    assert find_kappa_clique_cut(glued_cycles()) == cut(0, 1)
    assert find_kappa_clique_cut(fig1_threshold16()) == cut(0, 1, 11)
    assert find_kappa_clique_cut(path_graph(5)).t == 1


@given(st.integers(2, 14), st.integers(0, 2**32))
def test_chordal_graphs_always_have_a_clique_cut(n, seed):
    g = random_chordal(n, seed, connected=True)
    if g.is_complete():
        return
    s = find_kappa_clique_cut(g)
    assert s is not None and g.is_clique(s.members)


@given(edges_strategy(max_n=7))
def test_clique_cut_enumeration_matches_brute_force(g):
    if g.n == 0 or g.is_complete() or not g.is_connected():
        return
    assert set(c.members for c in all_kappa_clique_cuts(g)) == set(brute_kappa_clique_cuts(g))


@given(edges_strategy(max_n=7))
def test_every_minimum_cut_of_a_chordal_graph_is_a_clique(g):
    if g.n == 0 or g.is_complete() or not g.is_connected() or not recognize_chordal(g):
        return
    s = find_min_vertex_cut(g)
    assert len(s) == brute_vertex_connectivity(g) and is_clique(g, s)
    for h in s_subgraphs(g, CliqueCut(frozenset(s))).subgraphs:
        assert recognize_chordal(h.graph)


# --- S-subgraphs ------------------------------------------------------------------------


def test_s_subgraphs_examples():
    d = s_subgraphs(two_k4_on_triangle(), cut(0, 1, 2))
    assert [h.graph for h in d.subgraphs] == [complete_graph(4), complete_graph(4)]
    d = s_subgraphs(star_graph(3), cut(0))
    assert [h.graph for h in d.subgraphs] == [complete_graph(2)] * 3
    assert [h.component for h in d.subgraphs] == [(1,), (2,), (3,)]


def test_glued_cycles_decompose_into_head_and_cycles():
    g = glued_cycles()
    assert g.n == 10
    d = s_subgraphs(g, cut(0, 1))
    graphs = [h.graph for h in d.subgraphs]
    assert graphs[0] == complete_graph(4)
    for h, k in zip(graphs[1:], (4, 5, 3)):
        assert h.n == k and all(h.degree(v) == 2 for v in h.vertices) and h.is_connected()
    assert d.distinguished_index == 0
    assert d.to_json()["cut"] == [0, 1]


@pytest.mark.parametrize("members", [(0,), (0, 1, 3), (3, 4)])
def test_invalid_cuts_rejected(members):
    g = two_k4_on_triangle()
    with pytest.raises(ValidationError):
        s_subgraphs(g, cut(*members))
    with pytest.raises(ValidationError):
        s_subgraphs(cycle_graph(4), cut(0, 2))  # not a clique


# --- structure theorem -----------------------------------------------------------------


def test_structure_theorem_examples():
    rep = verify_structure_theorem(two_k4_on_triangle(), cut(0, 1, 2))
    assert rep.overall and is_ideally_connected(two_k4_on_triangle())
    rep = verify_structure_theorem(bowtie(), cut(0))
    assert rep.cond1 and rep.cond3 and not rep.cond2 and not rep.overall
    w = is_ideally_connected(bowtie()).witness
    assert w.local == 1 and w.bound == 2
    rep = verify_structure_theorem(glued_cycles(), cut(0, 1))
    assert rep.overall and is_ideally_connected(glued_cycles())
    assert rep.to_json()["overall"] is True


def test_structure_condition_three_failure():
    # K4 - e with deg(0) = 3 > deg(1) = 2, glued to two copies with the roles swapped
    lean = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])
    g = glue_along_clique([(lean, [0, 1]), (lean, [1, 0]), (lean, [1, 0])], 2)
    assert g.degree(0) < g.degree(1)
    rep = verify_structure_theorem(g, cut(0, 1))
    assert not rep.cond3 and rep.cond3.detail[0]["subgraph"] == 0
    assert not is_ideally_connected(g)


@given(edges_strategy(max_n=7))
def test_structure_theorem_biconditional(g):
    if g.n == 0 or g.is_complete() or not g.is_connected():
        return
    ideal = is_ideally_connected(g).ideally_connected
    for s in all_kappa_clique_cuts(g):
        assert verify_structure_theorem(g, s).overall == ideal


# --- gluing ---------------------------------------------------------------------------


def test_glue_examples():
    assert two_k4_on_triangle() == complete_graph(5).remove_edge(3, 4)
    assert glue_along_clique([(cycle_graph(5), [0, 1])], 2) == cycle_graph(5)
    with pytest.raises(ValidationError):
        glue_along_clique([(cycle_graph(4), [0, 2])], 2)
    with pytest.raises(ValidationError):
        glue_along_clique([(cycle_graph(4), [0, 1, 2])], 2)
    with pytest.raises(ValidationError):
        glue_along_clique([], 1)


@given(st.lists(st.integers(3, 6), min_size=2, max_size=4), st.integers(1, 2))
def test_glue_then_split_recovers_parts(sizes, t):
    # a clique first, then cycles; vertices 0..t-1 form a clique in each
    parts = [(complete_graph(sizes[0]), list(range(t)))]
    parts += [(cycle_graph(k), list(range(t))) for k in sizes[1:]]
    g = glue_along_clique(parts, t)
    pieces = s_subgraphs(g, CliqueCut(frozenset(range(t))), validate=False).subgraphs
    assert len(pieces) == len(parts)
    for (h, _), piece in zip(parts, pieces):
        assert piece.graph == h


def test_glue_restricts_to_each_part():
    g = glued_cycles()
    h, _ = induced_subgraph(g, [0, 1, 4, 5])
    assert h.m == 4 and all(h.degree(v) == 2 for v in h.vertices)


# --- lemmas ---------------------------------------------------------------------------


def test_lemma_u_s_examples():
    assert check_lemma_u_s(two_k4_on_triangle(), cut(0, 1, 2))
    assert check_lemma_u_s(glued_cycles(), cut(0, 1))
    for n in (2, 3, 5):
        assert check_lemma_u_s(star_graph(n), cut(0))


def test_lemmas_require_ideal_graph():
    with pytest.raises(PreconditionError):
        check_lemma_u_s(bowtie(), cut(0))
    with pytest.raises(PreconditionError):
        check_unique_cut(path_graph(4))


def test_unique_cut_examples():
    for n in (2, 4):
        assert check_unique_cut(star_graph(n))
    assert check_unique_cut(two_k4_on_triangle())
    assert check_unique_cut(fig1_threshold16())
    assert check_unique_cut(glued_cycles())


def test_lemma_suite_on_fixtures():
    for g, s in ((fig1_threshold16(), cut(0, 1, 11)), (glued_cycles(), cut(0, 1))):
        assert check_lemma_high_degree(g, s)
        assert check_lemma_cut_pairs(g, s)
        assert check_lemma_subgraphs_ideal(g, s)


@given(edges_strategy(max_n=7))
def test_lemmas_on_ideal_graphs(g):
    if g.n == 0 or g.is_complete() or not g.is_connected() or not is_ideally_connected(g):
        return
    cuts = all_kappa_clique_cuts(g)
    for s in cuts:
        assert check_lemma_u_s(g, s)
        assert check_lemma_high_degree(g, s)
        assert check_lemma_cut_pairs(g, s)
        assert check_lemma_subgraphs_ideal(g, s)
    if cuts:
        assert check_unique_cut(g)


# --- chordal refinement -----------------------------------------------------------------


def test_chordal_structure_examples():
    g = fig1_threshold16()
    st_ = chordal_structure(g, cut(0, 1, 11))
    assert st_ is not None
    head = st_.decomposition.subgraphs[st_.head_index]
    assert set(range(12)) <= set(head.vertices)
    assert st_.simplicial_vertices == [12, 13]
    st_ = chordal_structure(two_k4_on_triangle(), cut(0, 1, 2))
    assert st_ is not None and st_.simplicial_vertices in ([3], [4])
    g = fig4_split_counterexample()
    for s in all_kappa_clique_cuts(g):
        assert chordal_structure(g, s) is None


def test_chordal_structure_needs_head_degree_bound():
    # d-a-b-c with cut {a}: head a-b-c is ideal, 1-connected and chordal, yet P4 is not ideal
    g = Graph.from_edges(4, [(3, 0), (0, 1), (1, 2)])
    assert chordal_structure(g, cut(0)) is None
    assert not is_ideally_connected(g)


def test_chordal_structure_rejects_non_chordal():
    with pytest.raises(PreconditionError):
        chordal_structure(cycle_graph(4), cut(0, 2))


@given(edges_strategy(max_n=7))
def test_chordal_structure_iff_ideal(g):
    if g.n == 0 or g.is_complete() or not g.is_connected() or not recognize_chordal(g):
        return
    s = find_kappa_clique_cut(g)
    found = chordal_structure(g, s)
    assert (found is not None) == is_ideally_connected(g).ideally_connected
    if found is not None:
        for i, h in enumerate(found.decomposition.subgraphs):
            if i != found.head_index:
                assert h.graph == complete_graph(s.t + 1)


def test_find_simplicial_examples():
    assert find_simplicial(complete_graph(4)) == {0, 1, 2, 3}
    assert find_simplicial(cycle_graph(4)) == set()
    assert find_simplicial(fig4_split_counterexample()) == {3, 4, 5}
