# tridom/solvers/preconditions.py
from tridom.core.digraph import MultipartiteDigraph
from tridom.core.operations import find_cyclic_triangle
from tridom.oracles.independence import max_independent_set, max_transversal_independent_set
from tridom.utils.config import Settings
from tridom.utils.errors import PreconditionAlpha, PreconditionBeta, PreconditionTriangle
import logging

log = logging.getLogger(__name__)


def require_triangle_free(digraph: MultipartiteDigraph) -> None:
    witness = find_cyclic_triangle(digraph)
    if witness is not None:
        log.error(f"{digraph.label}: cyclic triangle {witness}")
        raise PreconditionTriangle(witness)


def require_beta_at_most(digraph: MultipartiteDigraph, limit: int,
                         settings: Settings | None = None, exact: bool = False) -> int:
    """Exact beta, raising PreconditionBeta (with a witness) if it exceeds `limit` (or differs, if exact)."""
    witness = max_transversal_independent_set(digraph, settings)
    beta = len(witness)
    if beta > limit or (exact and beta != limit):
        allowed = f"beta = {limit}" if exact else f"beta <= {limit}"
        raise PreconditionBeta(beta, allowed, witness)
    return beta


def require_alpha_at_most(digraph: MultipartiteDigraph, limit: int,
                          settings: Settings | None = None) -> int:
    witness = max_independent_set(digraph, settings)
    if len(witness) > limit:
        raise PreconditionAlpha(len(witness), f"alpha <= {limit}", witness)
    return len(witness)
