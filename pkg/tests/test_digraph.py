# tests/test_digraph.py
import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tests.conftest import cyclic_k22, transitive_tournament
from tridom.core.digraph import MultipartiteDigraph, SimpleDigraph, as_multipartite, validate
from tridom.core.operations import (
    find_cyclic_triangle,
    in_neighborhood,
    induced_subdigraph,
    out_neighborhood,
    underlying_adjacent,
)
from tridom.generators.random_instances import gen_random_multipartite_trianglefree
from tridom.utils.errors import (
    DuplicateArc,
    DuplicateClassMember,
    EmptyClass,
    IntraClassArc,
    InvalidInstance,
    TwoCycle,
    UnassignedVertex,
    VertexOutOfRange,
)


def test_smallest_valid_digraph():
    d = validate(2, [[0], [1]], [(0, 1)])
    assert d.num_vertices == 2
    assert d.num_classes == 2
    assert d.arcs == {(0, 1)}
    assert d.out_lists == ((1,), ())


@pytest.mark.parametrize("classes, arcs, error, attribute, value", [
    ([[0, 1]], [(0, 1)], IntraClassArc, "arc", (0, 1)),
    ([[0], [1]], [(0, 1), (1, 0)], TwoCycle, "arc", (0, 1)),
    ([[0], [1]], [(0, 1), (0, 1)], DuplicateArc, "arc", (0, 1)),
    ([[0]], [], UnassignedVertex, "vertex", 1),
    ([[0], [], [1]], [], EmptyClass, "class_index", 1),
    ([[0, 1], [1]], [], DuplicateClassMember, "vertex", 1),
    ([[0], [1]], [(0, 5)], VertexOutOfRange, "vertex", 5),
])
def test_validation_names_the_offending_element(classes, arcs, error, attribute, value):
    with pytest.raises(error) as info:
        validate(2, classes, arcs)
    assert getattr(info.value, attribute) == value
    assert isinstance(info.value, InvalidInstance)
    assert isinstance(info.value, ValueError)


def test_self_loop_is_an_intra_class_arc():
    with pytest.raises(IntraClassArc):
        SimpleDigraph(2, [(1, 1)])


def test_out_neighborhood_examples(k22):
    assert out_neighborhood(k22, [0, 1], closed=True) == (0, 1, 2, 3)
    assert out_neighborhood(k22, [0, 1]) == (2, 3)
    assert out_neighborhood(k22, [], closed=True) == ()
    path = SimpleDigraph(3, [(0, 1), (1, 2)])
    assert out_neighborhood(path, [0]) == (1,)
    with pytest.raises(VertexOutOfRange):
        out_neighborhood(path, [7])


def test_in_neighborhood_and_adjacency(k22):
    assert in_neighborhood(k22, [2]) == (0,)
    assert underlying_adjacent(k22, 2, 0)
    assert not underlying_adjacent(k22, 0, 1)


def test_find_cyclic_triangle_examples(k22):
    triangle = SimpleDigraph(3, [(0, 1), (1, 2), (2, 0)])
    assert find_cyclic_triangle(triangle) == (0, 1, 2)
    assert find_cyclic_triangle(transitive_tournament(3)) is None
    assert find_cyclic_triangle(k22) is None


def test_find_cyclic_triangle_respects_within():
    d = SimpleDigraph(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
    assert find_cyclic_triangle(d, within=0b1011) is None


def test_induced_subdigraph_examples(k22):
    assert induced_subdigraph(k22, range(4)) == k22
    empty = induced_subdigraph(k22, [])
    assert empty.num_vertices == 0
    assert empty.num_classes == 0
    part = induced_subdigraph(k22, [0, 2])
    assert part.arcs == {(0, 1)}
    assert part.classes == ((0,), (1,))
    assert part.origin_vertex == (0, 2)
    assert part.origin_class == (0, 1)


def test_induced_subdigraph_drops_emptied_classes():
    d = MultipartiteDigraph(4, [[0], [1, 2], [3]], [(0, 1), (2, 3)])
    sub = induced_subdigraph(d, [0, 3])
    assert sub.num_classes == 2
    assert sub.origin_class == (0, 2)


def test_simple_and_multipartite_interconvert(pentagon):
    as_mpd = as_multipartite(pentagon)
    assert as_mpd.classes == tuple((v,) for v in range(5))
    back = as_mpd.as_simple()
    assert isinstance(back, SimpleDigraph)
    assert back == pentagon
    assert induced_subdigraph(pentagon, [0, 1, 2]).__class__ is SimpleDigraph


def test_networkx_round_trip(k22):
    graph = k22.to_networkx()
    assert isinstance(graph, nx.DiGraph)
    assert nx.get_node_attributes(graph, "part") == {0: 0, 1: 0, 2: 1, 3: 1}
    assert MultipartiteDigraph.from_networkx(graph) == k22


def test_summary_dict(k22):
    assert k22.summary_dict() == {"label": "C4", "n": 4, "t": 2, "arcs": 4, "class_sizes": [2, 2]}


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32), vertices=st.sets(st.integers(0, 11)))
def test_closed_neighborhood_adds_only_the_set(seed, vertices):
    d = gen_random_multipartite_trianglefree(4, 3, 0.6, seed)
    open_part = set(out_neighborhood(d, vertices))
    closed = set(out_neighborhood(d, vertices, closed=True))
    assert open_part <= closed
    assert closed - open_part <= vertices


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32), vertices=st.sets(st.integers(0, 11)))
def test_induced_subdigraphs_stay_triangle_free(seed, vertices):
    d = gen_random_multipartite_trianglefree(4, 3, 0.8, seed)
    sub = induced_subdigraph(d, vertices)
    assert find_cyclic_triangle(sub) is None
    for u, v in sub.arcs:
        assert (sub.origin_vertex[u], sub.origin_vertex[v]) in d.arcs
    assert all((v, u) not in sub.arcs for u, v in sub.arcs)


def test_cyclic_k22_helper_matches_generator():
    from tridom.generators.constructions import gen_Dk
    assert gen_Dk(1).arcs == cyclic_k22().arcs
