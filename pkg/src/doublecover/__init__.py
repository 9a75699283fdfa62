"""Branched double cover groups of link diagrams.

From a PD code: the checkerboard white graph, a presentation of the
fundamental group of the branched double cover, its first homology (whose
order is the link determinant), and the left-orderability verdict for
alternating links, cross-checked by coset enumeration.
"""

from .checkerboard import (
    Coloring,
    VertexStar,
    WhiteGraph,
    build_white_graph,
    color_faces,
    crossing_sign,
    to_dot,
    vertex_star,
)
from .coset import CosetTable, cross_check, enumerate_cosets, todd_coxeter
from .diagram import (
    AlternationReport,
    Dart,
    LinkDiagram,
    PdCode,
    build_diagram,
    check_alternating,
    mirror_pd,
    parse_pd,
    split_components,
)
from .homology import (
    H1Group,
    IntegerMatrix,
    SnfResult,
    determinant,
    diagram_homology,
    diagram_presentation,
    h1_order,
    smith_normal_form,
)
from .orderability import OrderabilityVerdict, ProofTrace, certify, decide, verdict_report
from .presentation import (
    GroupPresentation,
    Word,
    abelianization_matrix,
    build_presentation,
    export_presentation,
    parse_presentation,
)

__version__ = "0.1.0"
