# tridom/generators/__init__.py
from tridom.generators.constructions import dk_projection_violations, dk_side_size, gen_Dk, gen_pentagons
from tridom.generators.random_instances import (
    GallaiSample,
    gen_random_bipartite_tournament,
    gen_random_dag,
    gen_random_digraph,
    gen_random_gallai,
    gen_random_multipartite_trianglefree,
    make_rng,
    union_bound,
)
