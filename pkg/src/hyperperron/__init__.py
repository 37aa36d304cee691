"""Inverse Perron values, analytic connectivity and electrical quantities of
k-uniform hypergraphs, with a certificate harness for the inequalities that
relate them."""

from .backend import backend_name
from .certify import (
    CorpusReport,
    CorpusSpec,
    certify_corpus,
    certify_instance,
    default_corpus,
    render_certificates,
    render_corpus_report,
)
from .combinatorics import (
    CutReport,
    DesignParams,
    bipartition_width,
    cut,
    design_edge_connectivity_bounds,
    detect_2_design,
    edge_connectivity,
    isoperimetric_number,
)
from .hypergraph import (
    ComponentLabeling,
    DisconnectedError,
    Hypergraph,
    ParseError,
    components,
    degree,
    diameter,
    distance,
    eccentricity,
    generate,
    is_connected,
    parse,
    radius,
    render,
)
from .perron import (
    EnumerationLimitError,
    PerronResult,
    PerronSummary,
    SolverOptions,
    inverse_perron,
    is_connected_spectral,
    oracle_grid,
    perron_summary,
    solve_projected_gradient,
    solve_shifted_power,
)
from .report import Certificate, THEOREM_IDS
from .resistance import (
    NumericalError,
    ResistanceReport,
    check_section4,
    padded_one_inverse,
    principal_inverse,
    resistance_matrix,
)
from .tensor_form import (
    HEigenResidual,
    h_eigen_residual,
    laplacian_apply,
    laplacian_form,
    principal_apply,
)

__version__ = "0.1.0"
