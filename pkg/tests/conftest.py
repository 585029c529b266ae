# tests/conftest.py
from collections.abc import Iterator

import pytest

from tridom.core.digraph import MultipartiteDigraph, SimpleDigraph
from tridom.generators.constructions import gen_pentagons
from tridom.generators.random_instances import gen_random_multipartite_trianglefree
from tridom.oracles.independence import beta_exact


def transitive_tournament(n: int) -> SimpleDigraph:
    """Vertex 0 is the source; i -> j for all i < j."""
    return SimpleDigraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)], label=f"TT{n}")


def cyclic_k22() -> MultipartiteDigraph:
    """a1=0, a2=1, b1=2, b2=3 with a1 -> b1 -> a2 -> b2 -> a1."""
    return MultipartiteDigraph(4, [[0, 1], [2, 3]], [(0, 2), (2, 1), (1, 3), (3, 0)], label="C4")


def trianglefree_with_beta(predicate, count: int, shapes, max_seeds: int = 5000) -> Iterator[MultipartiteDigraph]:
    """Seeded generator output whose beta satisfies `predicate`; shapes cycle as (t, class_size, completeness)."""
    found = 0
    for seed in range(max_seeds):
        t, size, completeness = shapes[seed % len(shapes)]
        digraph = gen_random_multipartite_trianglefree(t, size, completeness, seed)
        if predicate(beta_exact(digraph)):
            found += 1
            yield digraph
            if found == count:
                return
    raise AssertionError(f"only {found} of {count} instances found in {max_seeds} seeds")


@pytest.fixture
def pentagon() -> SimpleDigraph:
    return gen_pentagons(1)


@pytest.fixture
def two_pentagons() -> SimpleDigraph:
    return gen_pentagons(2)


@pytest.fixture
def k22() -> MultipartiteDigraph:
    return cyclic_k22()


@pytest.fixture
def tournament() -> SimpleDigraph:
    return transitive_tournament(5)


@pytest.fixture(scope="session")
def beta_one_instances() -> list[MultipartiteDigraph]:
    # complete multipartite underlying graphs always have beta = 1; bipartite shapes never need
    # triangle repair, so their coin orientations keep plenty of cyclic quadrangles
    shapes = [(2, 3, 1.0), (2, 4, 1.0), (2, 5, 1.0), (2, 4, 1.0), (3, 3, 1.0), (3, 2, 1.0)]
    return list(trianglefree_with_beta(lambda b: b == 1, 200, shapes))
