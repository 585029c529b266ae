# tests/test_clique_acyclic.py
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tests.conftest import transitive_tournament
from tridom.core.digraph import SimpleDigraph
from tridom.generators.random_instances import (
    gen_random_dag,
    gen_random_digraph,
    gen_random_multipartite_trianglefree,
)
from tridom.oracles.certificates import (
    DominationCertificate,
    check_independent_set,
    check_semi_kernel,
    check_vertex_domination,
)
from tridom.oracles.domination import gamma_exact
from tridom.oracles.independence import alpha_exact
from tridom.solvers.bounds import f_bound
from tridom.solvers.clique_acyclic import (
    dominate_acyclic_orientation,
    dominate_alpha2,
    dominate_clique_acyclic,
    dominate_via_clique_cover,
    semi_kernel,
)
from tridom.utils.errors import (
    NotAClique,
    NotACover,
    NotAcyclic,
    PreconditionAlpha,
    PreconditionTriangle,
)

CYCLIC_TRIANGLE = SimpleDigraph(3, [(0, 1), (1, 2), (2, 0)])
# a -> b, c -> d, a -> c, b -> d: alpha = 2 ({a, d} and {b, c})
SQUARE = SimpleDigraph(4, [(0, 1), (2, 3), (0, 2), (1, 3)])


def _dominates(d, vertices) -> bool:
    return isinstance(check_vertex_domination(d, vertices), DominationCertificate)


class TestSemiKernel:
    def test_examples(self, pentagon):
        assert semi_kernel(SimpleDigraph(1, [])) == (0,)
        assert semi_kernel(CYCLIC_TRIANGLE) == (2,)
        kernel = semi_kernel(pentagon)
        assert kernel == (2, 4)
        assert check_semi_kernel(pentagon, kernel) is None

    @settings(max_examples=60, deadline=None)
    @given(n=st.integers(0, 40), p=st.sampled_from([0.1, 0.3, 0.7]), seed=st.integers(0, 2**32))
    def test_property_on_random_digraphs(self, n, p, seed):
        d = gen_random_digraph(n, p, seed)
        assert check_semi_kernel(d, semi_kernel(d)) is None


@pytest.mark.slow
def test_semi_kernel_suite():
    for seed in range(500):
        d = gen_random_digraph(10 + seed % 41, (0.1, 0.3, 0.7)[seed % 3], seed)
        assert check_semi_kernel(d, semi_kernel(d)) is None, d.label


class TestCliqueAcyclic:
    def test_examples(self, pentagon, two_pentagons):
        assert dominate_clique_acyclic(transitive_tournament(6)).vertices == (0,)
        vertices, certificate = dominate_clique_acyclic(pentagon)
        assert len(vertices) <= f_bound(2) == 4
        assert certificate.chosen == vertices
        vertices, _ = dominate_clique_acyclic(two_pentagons)
        assert gamma_exact(two_pentagons)[0] == 6 <= len(vertices) <= f_bound(4) == 64

    def test_rejects_triangles(self):
        with pytest.raises(PreconditionTriangle):
            dominate_clique_acyclic(CYCLIC_TRIANGLE)


@pytest.mark.slow
def test_clique_acyclic_suite():
    checked = 0
    seed = 0
    while checked < 200:
        n = 7 + seed % 6
        d = gen_random_multipartite_trianglefree(n, 1, (0.8, 0.9, 0.95)[seed % 3], seed)
        seed += 1
        alpha = alpha_exact(d)
        if alpha > 3:
            continue
        vertices, _ = dominate_clique_acyclic(d)
        assert _dominates(d, vertices), d.label
        assert gamma_exact(d)[0] <= len(vertices) <= f_bound(alpha), d.label
        checked += 1
    assert seed < 5000


class TestAlphaTwo:
    def test_pentagon_needs_three(self, pentagon):
        vertices, _ = dominate_alpha2(pentagon)
        assert vertices == (1, 3, 4)
        assert _dominates(pentagon, vertices)

    def test_tournament_and_square(self, tournament):
        assert len(dominate_alpha2(tournament).vertices) <= 3
        vertices, _ = dominate_alpha2(SQUARE)
        assert gamma_exact(SQUARE)[0] <= len(vertices) <= 3
        assert _dominates(SQUARE, vertices)

    def test_rejects_large_alpha(self, two_pentagons):
        with pytest.raises(PreconditionAlpha) as info:
            dominate_alpha2(two_pentagons)
        assert info.value.alpha == 4

    @settings(max_examples=40, deadline=None)
    @given(seed=st.integers(0, 2**32))
    def test_random_alpha_two(self, seed):
        d = gen_random_multipartite_trianglefree(9, 1, 0.9, seed)
        if alpha_exact(d) > 2:
            return
        vertices, _ = dominate_alpha2(d)
        assert len(vertices) <= 3
        assert _dominates(d, vertices)


class TestAcyclicOrientation:
    def test_examples(self):
        path = SimpleDigraph(3, [(0, 1), (1, 2)])
        assert dominate_acyclic_orientation(path).vertices == (0, 2)
        assert dominate_acyclic_orientation(transitive_tournament(5)).vertices == (0,)
        assert dominate_acyclic_orientation(SimpleDigraph(4, [])).vertices == (0, 1, 2, 3)

    def test_rejects_cycles(self, pentagon):
        with pytest.raises(NotAcyclic) as info:
            dominate_acyclic_orientation(pentagon)
        assert len(info.value.cycle) == 5


@pytest.mark.slow
def test_acyclic_orientation_suite():
    for seed in range(100):
        d = gen_random_dag(8 + seed % 12, 0.3, seed)
        vertices, _ = dominate_acyclic_orientation(d)
        assert _dominates(d, vertices)
        assert check_independent_set(d, vertices) is None
        assert len(vertices) <= alpha_exact(d)


class TestCliqueCover:
    def test_pentagon(self, pentagon):
        assert dominate_via_clique_cover(pentagon, [[0, 1], [2, 3], [4]]).vertices == (0, 2, 4)

    def test_single_clique_and_singletons(self, tournament):
        assert dominate_via_clique_cover(tournament, [range(5)]).vertices == (0,)
        assert dominate_via_clique_cover(tournament, [[v] for v in range(5)]).vertices == (0, 1, 2, 3, 4)

    def test_cover_errors(self, pentagon):
        with pytest.raises(NotAClique) as info:
            dominate_via_clique_cover(pentagon, [[0, 2], [1], [3], [4]])
        assert info.value.clique_index == 0
        assert info.value.pair == (0, 2)
        with pytest.raises(NotACover) as info:
            dominate_via_clique_cover(pentagon, [[0, 1], [2, 3]])
        assert info.value.vertex == 4
