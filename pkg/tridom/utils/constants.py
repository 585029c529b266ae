# tridom/utils/constants.py

# --- Oracle guardrails ---
DEFAULT_VERTEX_BUDGET = 64      # exact oracles refuse larger instances
DEFAULT_NODE_BUDGET = 5_000_000  # search nodes for the dominate_general argmax
DEFAULT_DK_BUDGET = 4           # largest k accepted by gen_Dk (D_4 has 240 vertices)
DEFAULT_THREADS = 1

# Below this many vertices the independence oracles skip the coloring bound
PLAIN_ENUMERATION_LIMIT = 20

# --- Environment variables ---
ENV_VERTEX_BUDGET = "TRIDOM_BUDGET"
ENV_NODE_BUDGET = "TRIDOM_NODE_BUDGET"
ENV_THREADS = "TRIDOM_THREADS"

# --- Random generation ---
TRIANGLE_REPAIR_ROUNDS_PER_VERTEX = 50   # orientation flips before falling back
GALLAI_DELETION_ATTEMPTS_PER_VERTEX = 2  # edge deletions tried per vertex

# --- Report formatting ---
REPORT_PREFIX = "#R "
