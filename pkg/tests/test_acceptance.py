"""Exit criteria. Each test tags itself with its criterion number; the terminal
summary prints one PASS/FAIL line per criterion."""

import time
from functools import lru_cache
from itertools import combinations, permutations

import pytest

from oracles import brute_kappa, labelled_trees, nx_graph6
from idealconn.cliquetree import (
    CliqueTreePair,
    is_clique_tree_universal,
    kj_profile,
    maximal_cliques_chordal,
    universal_assignment,
    verify_clique_tree_pair,
    verify_threshold_tree_pair,
)
from idealconn.connectivity import is_ideally_connected, is_strongly_m_menger, local_connectivity
from idealconn.decomposition import (
    all_kappa_clique_cuts,
    check_lemma_cut_pairs,
    check_lemma_high_degree,
    check_lemma_subgraphs_ideal,
    check_lemma_u_s,
    check_unique_cut,
    verify_structure_theorem,
)
from idealconn.generators import (
    SplitMix64,
    all_graphs,
    all_threshold_graphs,
    fig1_threshold16,
    fig4_split_counterexample,
    random_chordal,
    random_cograph,
    random_graph,
    random_threshold,
    random_tree,
)
from idealconn.graph import parse_graph6, to_graph6
from idealconn.recognizers import recognize_chordal, recognize_cograph, recognize_split, recognize_threshold
from idealconn.theorems import fast_ideal_chordal, fast_ideal_cograph, threshold_disjoint_paths
from idealconn.trees import TreeShape, path_tree

pytestmark = pytest.mark.acceptance


@lru_cache(maxsize=None)
def small_graphs():
    return tuple(g for n in range(1, 7) for g in all_graphs(n))


@lru_cache(maxsize=None)
def oracle_verdicts():
    return tuple(is_ideally_connected(g).ideally_connected for g in small_graphs())


def _with_cut(g):
    return g.n > 0 and g.is_connected() and not g.is_complete()


def test_cograph_theorem_exhaustive(criterion):
    criterion(1)
    started = time.perf_counter()
    checked = 0
    for g, ideal in zip(small_graphs(), oracle_verdicts()):
        if recognize_cograph(g):
            assert fast_ideal_cograph(g).ideally_connected == ideal, to_graph6(g)
            checked += 1
    assert checked > 6000
    assert time.perf_counter() - started < 120


def test_chordal_theorem_exhaustive_and_random(criterion):
    criterion(2)
    started = time.perf_counter()
    checked = 0
    for g, ideal in zip(small_graphs(), oracle_verdicts()):
        if recognize_chordal(g):
            assert fast_ideal_chordal(g).ideally_connected == ideal, to_graph6(g)
            checked += 1
    assert checked > 19000
    disagreements = []
    for seed in range(10_000):
        g = random_chordal(1 + seed % 12, seed, connected=seed % 2 == 1)
        if fast_ideal_chordal(g).ideally_connected != is_ideally_connected(g).ideally_connected:
            disagreements.append(to_graph6(g))
    assert disagreements == []
    assert time.perf_counter() - started < 300


def test_structure_theorem_exhaustive(criterion):
    criterion(3)
    graphs_with_cut = cuts = 0
    for g, ideal in zip(small_graphs(), oracle_verdicts()):
        if not _with_cut(g):
            continue
        found = all_kappa_clique_cuts(g)
        graphs_with_cut += bool(found)
        for s in found:
            assert verify_structure_theorem(g, s).overall == ideal, (to_graph6(g), s.sorted())
            cuts += 1
    assert graphs_with_cut > 1000 and cuts >= graphs_with_cut


def _lemmas_hold(g):
    cuts = all_kappa_clique_cuts(g)
    for s in cuts:
        assert check_lemma_u_s(g, s), (to_graph6(g), s.sorted())
        assert check_lemma_high_degree(g, s), (to_graph6(g), s.sorted())
        assert check_lemma_cut_pairs(g, s), (to_graph6(g), s.sorted())
        assert check_lemma_subgraphs_ideal(g, s), (to_graph6(g), s.sorted())
    if cuts:
        assert check_unique_cut(g), to_graph6(g)
    return bool(cuts)


def test_lemmas_on_ideal_graphs(criterion):
    criterion(4)
    exhaustive = sum(
        _lemmas_hold(g) for g, ideal in zip(small_graphs(), oracle_verdicts()) if ideal and _with_cut(g)
    )
    assert exhaustive > 100
    # disconnected and complete threshold graphs have no cut at all; draw until 1000 do
    random_hits = seed = 0
    while random_hits < 1000:
        g = random_threshold(2 + seed % 13, seed)
        seed += 1
        if _with_cut(g):
            assert is_ideally_connected(g)
            assert _lemmas_hold(g), to_graph6(g)
            random_hits += 1


def test_figure_fixtures(criterion):
    criterion(5)
    started = time.perf_counter()
    g = fig1_threshold16()
    cliques = maximal_cliques_chordal(g)
    assert len(cliques) == 5
    assert kj_profile(g) == (5, 5, 5, 5, 3, 2, 1, 1, 1, 1, 1, 1)
    assert recognize_threshold(g) and is_ideally_connected(g)

    h = fig4_split_counterexample()
    assert recognize_split(h) and recognize_chordal(h) and not recognize_threshold(h)
    rep = is_ideally_connected(h)
    assert not rep and rep.witness.local == 3 and rep.witness.bound == 4
    assert len(maximal_cliques_chordal(h)) == 4
    res = is_clique_tree_universal(h)
    assert not res and res.failing_tree.canonical() == path_tree(4).canonical()
    assert all(
        not verify_clique_tree_pair(h, CliqueTreePair(path_tree(4), perm)) for perm in permutations(range(4))
    )
    assert not is_strongly_m_menger(h, 0).strongly_menger
    assert time.perf_counter() - started < 1.0


def test_universal_assignment_on_random_trees(criterion):
    criterion(6)
    started = time.perf_counter()
    graphs = seed = 0
    while graphs < 500:
        g = random_threshold(1 + seed % 16, seed)
        seed += 1
        cliques = maximal_cliques_chordal(g)
        if len(cliques) > 8:
            continue
        graphs += 1
        rng = SplitMix64(seed)
        for _ in range(20):
            pair = universal_assignment(g, random_tree(len(cliques), rng))
            assert verify_clique_tree_pair(g, pair, cliques), (to_graph6(g), pair)
    assert time.perf_counter() - started < 120


def test_threshold_tree_test_matches_general_test(criterion):
    criterion(7)
    seen = set()
    compared = 0
    for g in all_threshold_graphs(8):
        key = to_graph6(g)
        cliques = maximal_cliques_chordal(g)
        if key in seen or len(cliques) > 4:
            continue
        seen.add(key)
        k = len(cliques)
        for edges in labelled_trees(k):
            t = TreeShape(k, tuple(tuple(e) for e in edges))
            for perm in permutations(range(k)):
                pair = CliqueTreePair(t, perm)
                assert bool(verify_threshold_tree_pair(g, pair, cliques)) == bool(
                    verify_clique_tree_pair(g, pair, cliques)
                ), (key, t.edges, perm)
                compared += 1
    assert len(seen) > 100 and compared > 1000


def test_threshold_paths_are_short_and_optimal(criterion):
    criterion(8)
    started = time.perf_counter()
    for seed in range(1000):
        g = random_threshold(2 + seed % 49, seed)
        assert recognize_threshold(g)
        for u, v in combinations(range(g.n), 2):
            ps = threshold_disjoint_paths(g, u, v, check=False)
            ps.validate(g)
            assert len(ps) == min(g.degree(u), g.degree(v)) == local_connectivity(g, u, v)
            assert all(len(p) <= 3 for p in ps.paths)
    assert time.perf_counter() - started < 180


def test_local_connectivity_matches_enumeration(criterion):
    criterion(9)
    pairs = 0
    for n in range(2, 6):
        for g in all_graphs(n):
            for u, v in combinations(range(n), 2):
                assert local_connectivity(g, u, v) == brute_kappa(g, u, v), (to_graph6(g), u, v)
                pairs += 1
    assert pairs == sum(2 ** (n * (n - 1) // 2) * n * (n - 1) // 2 for n in range(2, 6))


def _corpus(lines):
    makers = [random_threshold, random_cograph, random_chordal]
    out = []
    for i in range(lines):
        kind = i % 5
        if kind < 3:
            g = makers[kind](1 + i % 40, i)
        elif kind == 3:
            g = random_graph(i % 30, i)
        else:
            g = random_graph(60 + i % 80, i, 1, 8)  # sizes either side of the long-header switch
        out.append(to_graph6(g))
    return out


def test_graph6_round_trip(criterion, tmp_path):
    criterion(10)
    lines = _corpus(10_000)
    path = tmp_path / "corpus.g6"
    path.write_bytes(("\n".join(lines) + "\n").encode("ascii"))
    back = [to_graph6(parse_graph6(line)) for line in path.read_bytes().decode("ascii").splitlines()]
    assert ("\n".join(back) + "\n").encode("ascii") == path.read_bytes()
    for line in lines[::10]:
        g = parse_graph6(line)
        assert nx_graph6(line) == (g.n, {frozenset(e) for e in g.edges()})
