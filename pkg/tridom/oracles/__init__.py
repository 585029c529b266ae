# tridom/oracles/__init__.py
from tridom.oracles.certificates import (
    DominationCertificate,
    Violation,
    check_class_domination,
    check_independent_set,
    check_semi_kernel,
    check_side_domination,
    check_structured_certificate,
    check_vertex_domination,
    is_certificate,
)
from tridom.oracles.domination import Gamma0Result, gamma0_exact, gamma_exact, k_exact, min_clique_cover
from tridom.oracles.independence import (
    alpha_exact,
    beta_exact,
    find_transversal_independent,
    max_independent_set,
    max_transversal_independent_set,
)
