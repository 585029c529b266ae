# tests/test_general.py
import pytest

from tests.conftest import trianglefree_with_beta
from tridom.core.digraph import MultipartiteDigraph, SimpleDigraph
from tridom.oracles.certificates import (
    DominationCertificate,
    check_class_domination,
    check_structured_certificate,
)
from tridom.oracles.domination import k_exact
from tridom.solvers.bounds import bound_tables, h_bound
from tridom.solvers.general import (
    STRICT,
    best_transversal_tuple,
    dominate_general,
    partition_classes,
)
from tridom.utils.config import Settings
from tridom.utils.errors import BudgetExceeded, PreconditionTriangle


def _verified(d, classes) -> bool:
    return isinstance(check_class_domination(d, classes), DominationCertificate)


def test_beta_one_dispatch_gives_one_class(k22):
    classes, certificate = dominate_general(k22)
    assert classes == (0,)
    assert certificate.has_structure


def test_pentagon_strict_mode(pentagon):
    classes, certificate = dominate_general(pentagon, mode=STRICT)
    assert len(classes) <= 11
    assert _verified(pentagon, classes)
    assert certificate.has_structure
    assert check_structured_certificate(pentagon, certificate) is None


def test_two_pentagons_dispatch(two_pentagons):
    classes, _ = dominate_general(two_pentagons)
    assert _verified(two_pentagons, classes)
    assert k_exact(two_pentagons)[0] == 6 <= len(classes) <= h_bound(4)


def test_rejects_triangles():
    with pytest.raises(PreconditionTriangle):
        dominate_general(SimpleDigraph(3, [(0, 1), (1, 2), (2, 0)]))


def test_unknown_mode(k22):
    with pytest.raises(ValueError):
        dominate_general(k22, mode="greedy")


def test_empty_digraph():
    classes, certificate = dominate_general(MultipartiteDigraph(0, [], []))
    assert classes == ()
    assert certificate.chosen == ()


def test_best_transversal_tuple_breaks_ties_lexicographically(pentagon):
    choice = best_transversal_tuple(pentagon, 2)
    assert choice.reach == 4
    assert choice.vertices == (0, 2)
    assert best_transversal_tuple(pentagon, 4).vertices == (0, 1, 2, 3)


def test_best_transversal_tuple_respects_classes():
    d = MultipartiteDigraph(4, [[0, 1], [2], [3]], [(0, 2), (0, 3), (1, 2), (1, 3)])
    choice = best_transversal_tuple(d, 2)
    assert len({d.class_of[v] for v in choice.vertices}) == 2
    assert choice.vertices == (0, 2)


def test_best_transversal_tuple_node_budget(two_pentagons):
    with pytest.raises(BudgetExceeded):
        best_transversal_tuple(two_pentagons, 8, Settings(node_budget=3))


def test_partition_classes(two_pentagons):
    core = (0, 2)
    partition = partition_classes(two_pentagons, core)
    assert partition.num_parts == len(core) + 2
    assert partition.core_classes == (0, 2)
    seen = sorted(v for p in partition.parts for v in p)
    assert seen == [v for v in range(10) if v not in core]
    assert set(partition.part(0)) == {1, 3}
    # 4 sends to 0; every vertex of the second pentagon ignores both core vertices
    assert set(partition.part(1)) == {5, 6, 7, 8, 9}
    assert set(partition.part(2)) == {4}
    assert partition.part(3) == ()
    assert partition.class_part(two_pentagons, 4, 2) == (4,)


@pytest.mark.slow
def test_general_beta_three_suite():
    shapes = [(7, 3, 0.8), (7, 3, 0.75), (8, 3, 0.85), (7, 4, 0.85), (9, 4, 0.9)]
    for d in trianglefree_with_beta(lambda b: b == 3, 100, shapes):
        assert d.num_vertices <= 36
        classes, _ = dominate_general(d)
        assert _verified(d, classes), d.label
        assert k_exact(d)[0] <= len(classes) <= 37, d.label


@pytest.mark.slow
def test_strict_mode_structure_suite():
    tables = bound_tables(2)
    shapes = [(6, 2, 0.9), (6, 3, 0.95), (7, 2, 0.9), (5, 3, 0.9)]
    for d in trianglefree_with_beta(lambda b: b == 2, 60, shapes):
        classes, certificate = dominate_general(d, mode=STRICT)
        assert len(classes) <= tables.h_strict[2]
        assert _verified(d, classes)
        assert check_structured_certificate(d, certificate) is None, d.label
        assert len(certificate.core_vertices) <= tables.h1[2]
        core_classes = {d.class_of[v] for v in certificate.core_vertices}
        assert len(set(certificate.exceptional_classes) - core_classes) <= tables.h2[2]
