import pytest
from hypothesis import given
from hypothesis import strategies as st

from idealconn.errors import DomainError, ResourceError
from idealconn.generators import (
    SplitMix64,
    all_graphs,
    all_threshold_graphs,
    fig1_threshold16,
    fig4_minus_edge,
    fig4_split_counterexample,
    random_chordal,
    random_cograph,
    random_graph,
    random_threshold,
    random_tree,
)
from idealconn.graph import Graph, to_graph6
from idealconn.recognizers import recognize_chordal, recognize_cograph, recognize_split, recognize_threshold


def test_splitmix_reference_values():
    rng = SplitMix64(0)
    assert rng.next_u64() == 0xE220A8397B1DCDAF
    assert rng.next_u64() == 0x6E789E6AA1B965F4
    assert SplitMix64(1234567).next_u64() == 6457827717110365317


def test_splitmix_is_deterministic():
    a, b = SplitMix64(42), SplitMix64(42)
    assert [a.next_u64() for _ in range(10)] == [b.next_u64() for _ in range(10)]


def test_splitmix_domain():
    with pytest.raises(DomainError):
        SplitMix64(-1)
    with pytest.raises(DomainError):
        SplitMix64(2**64)
    with pytest.raises(DomainError):
        SplitMix64(0).below(0)


@given(st.integers(0, 2**64 - 1), st.integers(1, 1000))
def test_below_stays_in_range(seed, n):
    rng = SplitMix64(seed)
    assert all(0 <= rng.below(n) < n for _ in range(20))


def test_shuffle_is_a_permutation():
    items = SplitMix64(7).shuffle(list(range(50)))
    assert sorted(items) == list(range(50)) and items != list(range(50))


@given(st.integers(1, 20), st.integers(0, 2**32))
def test_random_generators_land_in_their_class(n, seed):
    assert recognize_threshold(random_threshold(n, seed))
    assert recognize_cograph(random_cograph(n, seed))
    assert recognize_chordal(random_chordal(n, seed))
    g = random_chordal(n, seed, connected=True)
    assert recognize_chordal(g) and g.is_connected()


@pytest.mark.parametrize("make", [random_threshold, random_cograph, random_chordal, random_graph])
def test_generators_are_reproducible(make):
    assert to_graph6(make(12, 99)) == to_graph6(make(12, 99))
    assert make(1, 5) == Graph.empty(1)


@pytest.mark.parametrize("make", [random_threshold, random_cograph, random_chordal])
def test_generators_reject_empty(make):
    with pytest.raises(DomainError):
        make(0, 1)


def test_random_graph_density():
    assert random_graph(10, 3, 0, 1).m == 0
    assert random_graph(10, 3, 1, 1).m == 45


@given(st.integers(1, 15), st.integers(0, 2**32))
def test_random_tree_shape(k, seed):
    t = random_tree(k, SplitMix64(seed))
    assert t.k == k and len(t.edges) == k - 1


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 2), (3, 8), (4, 64)])
def test_all_graphs_counts(n, count):
    graphs = list(all_graphs(n))
    assert len(graphs) == count == len({to_graph6(g) for g in graphs})


def test_all_graphs_limit():
    with pytest.raises(ResourceError):
        next(all_graphs(8))


def test_all_threshold_graphs():
    graphs = list(all_threshold_graphs(5))
    assert len(graphs) == sum(2 ** (n - 1) for n in range(1, 6))
    assert len({to_graph6(g) for g in graphs}) == len(graphs)
    assert all(recognize_threshold(g) for g in graphs)


def test_fixtures():
    g = fig1_threshold16()
    assert g.n == 16 and g.m == 66 + 3 + 3 + 4 + 5
    assert recognize_threshold(g)
    h = fig4_split_counterexample()
    assert (h.n, h.m) == (6, 9) and recognize_split(h) and not recognize_threshold(h)
    k = fig4_minus_edge()
    assert k.m == 8 and not k.has_edge(0, 3)
