# tridom/solvers/__init__.py
from tridom.solvers.beta_small import (
    ClassDomination,
    StrongDomination,
    dominate_beta1,
    dominate_beta1_strong,
    dominate_beta2,
)
from tridom.solvers.bounds import BoundTables, bound_tables, f_bound, g_bound, h_bound, h_strict_bound
from tridom.solvers.clique_acyclic import (
    VertexDomination,
    dominate_acyclic_orientation,
    dominate_alpha2,
    dominate_clique_acyclic,
    dominate_via_clique_cover,
    semi_kernel,
)
from tridom.solvers.general import (
    ClassPartition,
    best_transversal_tuple,
    dominate_general,
    partition_classes,
)
