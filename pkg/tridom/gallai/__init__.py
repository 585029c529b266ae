# tridom/gallai/__init__.py
from tridom.gallai.colored_graph import (
    EdgeColoredGraph,
    check_gallai,
    induced_subgraph,
    mono_components,
)
from tridom.gallai.cover import (
    CoverPart,
    LargeComponentCheck,
    MonochromaticCover,
    OrientedNeighborhood,
    check_cover,
    check_largecomp_bound,
    cover_by_mono_components,
    orient_around_vertex,
)
