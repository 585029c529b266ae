# tests/test_oracles.py
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tests.conftest import transitive_tournament
from tridom.core.digraph import MultipartiteDigraph, SimpleDigraph
from tridom.generators.constructions import gen_Dk
from tridom.generators.random_instances import gen_random_digraph, gen_random_multipartite_trianglefree
from tridom.oracles.certificates import (
    DominationCertificate,
    Violation,
    check_class_domination,
    check_independent_set,
    check_semi_kernel,
    check_side_domination,
    check_structured_certificate,
    check_vertex_domination,
)
from tridom.oracles.domination import gamma0_exact, gamma_exact, k_exact, min_clique_cover
from tridom.oracles.independence import (
    alpha_exact,
    beta_exact,
    find_transversal_independent,
    max_transversal_independent_set,
)
from tridom.utils.config import Settings
from tridom.utils.errors import BudgetExceeded, ClassOutOfRange, NotBipartite


class TestIndependence:
    def test_beta_examples(self, k22, pentagon):
        assert beta_exact(k22) == 1
        single_arc = MultipartiteDigraph(4, [[0, 1], [2, 3]], [(0, 2)])
        assert beta_exact(single_arc) == 2
        witness = max_transversal_independent_set(single_arc)
        assert len(witness) == 2
        assert check_independent_set(single_arc, witness, transversal=True) is None
        assert beta_exact(pentagon) == 2

    def test_alpha_examples(self, pentagon, two_pentagons):
        assert alpha_exact(transitive_tournament(7)) == 1
        assert alpha_exact(pentagon) == 2
        assert alpha_exact(two_pentagons) == 4

    def test_find_transversal_independent_is_lexicographic(self, pentagon):
        assert find_transversal_independent(pentagon, 2) == (0, 2)
        assert find_transversal_independent(pentagon, 3) is None

    def test_budget_guard(self, two_pentagons):
        with pytest.raises(BudgetExceeded) as info:
            alpha_exact(two_pentagons, Settings(vertex_budget=8))
        assert info.value.size == 10

    def test_independent_set_checker(self, k22):
        assert check_independent_set(k22, [0, 1]) is None
        assert check_independent_set(k22, [0, 1], transversal=True) == Violation("same class", pair=(0, 1))
        assert check_independent_set(k22, [0, 2]).pair == (0, 2)


class TestCertificates:
    def test_class_domination_examples(self, k22):
        certificate = check_class_domination(k22, [0])
        assert isinstance(certificate, DominationCertificate)
        assert certificate.witness == {2: 0, 3: 1}
        assert check_class_domination(k22, [0, 1]).witness == {}
        path = MultipartiteDigraph(2, [[0], [1]], [(0, 1)])
        assert check_class_domination(path, [1]) == Violation("undominated", vertex=0)

    def test_class_out_of_range(self, k22):
        with pytest.raises(ClassOutOfRange):
            check_class_domination(k22, [2])

    def test_vertex_domination_examples(self, pentagon):
        assert isinstance(check_vertex_domination(pentagon, [0, 2, 4]), DominationCertificate)
        assert check_vertex_domination(pentagon, [0, 1]) == Violation("uncovered", vertex=3)
        assert isinstance(check_vertex_domination(SimpleDigraph(1, []), [0]), DominationCertificate)

    def test_structured_certificate(self, k22):
        plain = check_class_domination(k22, [0])
        assert check_structured_certificate(k22, plain) is not None
        assert check_structured_certificate(k22, plain.with_structure([0], [0, 1])) is None
        assert check_structured_certificate(k22, plain.with_structure([0], [0])).vertex == 3

    def test_semi_kernel_checker(self, pentagon):
        assert check_semi_kernel(pentagon, [2, 4]) is None
        assert check_semi_kernel(pentagon, [0, 1]).pair == (0, 1)
        assert check_semi_kernel(pentagon, [0]).vertex == 3

    def test_certificate_to_dict(self, k22):
        data = check_class_domination(k22, [0]).with_structure([0], [1]).to_dict()
        assert data["chosen"] == [0]
        assert data["core_vertices"] == [0]
        assert data["witness"] == {"2": 0, "3": 1}


class TestDominationOracles:
    def test_k_exact_examples(self, k22, pentagon):
        assert k_exact(k22) == (1, check_class_domination(k22, [0]))
        assert k_exact(pentagon)[0] == 3
        one_class = MultipartiteDigraph(3, [[0, 1, 2]], [])
        assert k_exact(one_class)[0] == 1

    def test_gamma_exact_examples(self, pentagon, two_pentagons):
        size, certificate = gamma_exact(pentagon)
        assert size == 3
        assert certificate.chosen == (0, 1, 3)
        assert gamma_exact(transitive_tournament(6))[1].chosen == (0,)
        assert gamma_exact(two_pentagons)[0] == 6

    def test_gamma0_examples(self, k22):
        assert gamma0_exact(k22).as_tuple() == (2, 2, 2)
        one_sided = MultipartiteDigraph(4, [[0, 1], [2, 3]], [(0, 2), (0, 3)])
        result = gamma0_exact(one_sided)
        assert result.as_tuple() == (1, None, 1)
        assert result.witness_a == (0,)
        assert check_side_domination(one_sided, result.witness_a, 1) is None

    def test_gamma0_of_d2_is_three(self):
        result = gamma0_exact(gen_Dk(2))
        assert result.gamma0 == 3
        assert check_side_domination(gen_Dk(2), result.witness_a, 1) is None

    def test_gamma0_requires_two_classes(self, pentagon):
        with pytest.raises(NotBipartite):
            gamma0_exact(pentagon)

    def test_parallel_search_matches_sequential(self, two_pentagons):
        sequential = gamma_exact(two_pentagons, Settings(threads=1))
        parallel = gamma_exact(two_pentagons, Settings(threads=2))
        assert sequential == parallel

    def test_min_clique_cover_of_pentagon(self, pentagon):
        assert min_clique_cover(pentagon) == [(0, 1), (2, 3), (4,)]


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**32))
def test_parameter_inequalities(seed):
    d = gen_random_multipartite_trianglefree(4, 2, 0.5, seed)
    assert beta_exact(d) <= alpha_exact(d) <= d.num_vertices
    assert beta_exact(d) <= d.num_classes


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**32))
def test_singleton_classes_collapse_parameters(seed):
    d = gen_random_digraph(9, 0.4, seed)
    assert k_exact(d)[0] == gamma_exact(d)[0]
    assert beta_exact(d) == alpha_exact(d)


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**32), data=st.data())
def test_adding_an_arc_never_increases_domination(seed, data):
    d = gen_random_digraph(8, 0.4, seed)
    missing = [(u, v) for u in range(8) for v in range(u + 1, 8) if not d.adjacent(u, v)]
    if not missing:
        return
    u, v = data.draw(st.sampled_from(missing))
    if data.draw(st.booleans()):
        u, v = v, u
    bigger = SimpleDigraph(8, [*d.arcs, (u, v)])
    assert k_exact(bigger)[0] <= k_exact(d)[0]
    assert gamma_exact(bigger)[0] <= gamma_exact(d)[0]


def test_oracles_are_deterministic(two_pentagons):
    assert gamma_exact(two_pentagons) == gamma_exact(two_pentagons)
    assert k_exact(two_pentagons) == k_exact(two_pentagons)
