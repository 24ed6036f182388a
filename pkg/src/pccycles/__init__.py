"""Properly colored cycles in edge-colored graphs and digraphs."""

from .construct import (
    ParamVector,
    build,
    edge_count_of,
    gsy_bounds,
    lemma_order_bound,
    literal_lemma_bound,
    lower_bound_d,
    merged_upper_bound,
    order_of,
)
from .core import (
    ColoredDigraph,
    ColoredGraph,
    DomainError,
    ParseError,
    PcCycleCertificate,
    PcgError,
    color_degree,
    degree_table,
    delta_mon,
    delta_out_mon,
    is_pc_cycle,
    parse,
    read_pcg,
    serialize,
    write_pcg,
)
from .detect import (
    DetectionResult,
    EliminationCertificate,
    SearchLimitError,
    decide_pc_undirected,
    find_pc_cycle_directed,
    find_pc_cycle_exhaustive,
    longest_pc_cycle,
)
from .search import (
    ConjectureReport,
    SearchReport,
    VerifyReport,
    conjecture_report,
    max_pcfree_delta,
    verify_suite,
)
from .transform import double, merge_colors, recolor

__version__ = "0.1.0"
