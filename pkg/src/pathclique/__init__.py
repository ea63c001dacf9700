"""Extremal graph constructions, closed-form clique-count formulas, and a
brute-force oracle for graphs forbidding a path and a clique."""

from .canon import canonical, canonical_form, canonical_with_generators
from .constructions import (
    double_star,
    g1,
    g2,
    g3,
    g4,
    g5,
    h_extremal,
    h_minus,
    turan,
    turan_union,
)
from .detect import (
    BlockDecomposition,
    ClassificationOutcome,
    StructureClass,
    blocks,
    classify_structure,
    count_cliques,
    has_clique,
    has_path,
    is_2connected,
    is_connected,
    is_free,
    longest_path_order,
    sigma3,
    strong_dominating_cycle,
    strong_dominating_path,
)
from .formulas import (
    CaseLabel,
    ParameterError,
    TheoremParams,
    delta_k,
    h_value,
    katona_value,
    luo_value,
    part_sizes,
    predicted_ex,
    predicted_ex_con,
    threshold_case,
    turan_cliques,
    turan_edges,
)
from .graph6 import graph6_decode, graph6_encode
from .graphs import (
    Graph,
    GraphError,
    complement,
    copies,
    disjoint_union,
    induced,
    join,
    make_graph,
    primitive,
    relabel,
)
from .oracle import (
    BudgetExceeded,
    CapExceeded,
    DisintegrationTrace,
    EnumerationConfig,
    ExtremalResult,
    disintegrate,
    enumerate_graphs,
    ex_oracle,
    g3_block_family,
    valid_attach_vertices,
    verify_classification,
    verify_theorem,
)
from .reports import VerificationRow, report_csv, report_json, write_report

__all__ = [name for name in dir() if not name.startswith("_")]
