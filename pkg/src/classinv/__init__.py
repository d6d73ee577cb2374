"""Combinatorial linear bases for tensor and polynomial invariants of the
classical groups GL, SL, O, SO, and Sp.

The package provides exact (integer / rational) implementations of:

* partitions and (semi)standard Young tableaux (:mod:`classinv.partitions`),
* arc diagrams with loops, multiplicities and hyperedges, together with
  their nesting statistics and basis-admissibility predicates
  (:mod:`classinv.diagrams`),
* the RSK correspondences that translate between tableaux, matrices, and
  diagrams (:mod:`classinv.rsk`),
* dimension formulas with several independent counting models
  (:mod:`classinv.dimensions`),
* exact-rational evaluation of the basis functionals, invariance checks,
  rank certificates and a Lie-algebra dimension oracle
  (:mod:`classinv.evaluate`).
"""

from .diagrams import (
    ArcDiagram,
    GroupKind,
    degree_sequence,
    diagram_to_matrix,
    enumerate_basis,
    hyperedge_thresholds,
    is_admissible,
    matrix_to_diagram,
    max_strict_nesting,
    weak_nonnesting_number,
)
from .dimensions import (
    InvariantQuery,
    count_lattice_walks,
    count_noncrossing_matchings,
    count_oscillating_tableaux,
    count_restricted_involutions,
    count_restricted_permutations,
    dim_invariants,
    graded_dim,
    stable_dim,
)
from .evaluate import (
    ArgumentTuple,
    FormSpec,
    check_invariance,
    evaluate_diagram_functional,
    evaluate_standard_monomial,
    evaluation_rank,
    lie_invariant_dim,
    pfaffian,
    sample_group_element,
)
from .natmatrix import NatMatrix
from .partitions import (
    Tableau,
    add_rectangle,
    conjugate,
    count_syt,
    enumerate_ssyt,
    enumerate_syt,
    partitions,
)
from .rsk import (
    Bitableau,
    rsk_a,
    rsk_a_inv,
    rsk_b,
    rsk_b_inv,
    rsk_c,
    rsk_c_inv,
    support_width,
)

__all__ = [
    "ArcDiagram",
    "ArgumentTuple",
    "Bitableau",
    "FormSpec",
    "GroupKind",
    "InvariantQuery",
    "NatMatrix",
    "Tableau",
    "add_rectangle",
    "check_invariance",
    "conjugate",
    "count_lattice_walks",
    "count_noncrossing_matchings",
    "count_oscillating_tableaux",
    "count_restricted_involutions",
    "count_restricted_permutations",
    "count_syt",
    "degree_sequence",
    "diagram_to_matrix",
    "dim_invariants",
    "enumerate_basis",
    "enumerate_ssyt",
    "enumerate_syt",
    "evaluate_diagram_functional",
    "evaluate_standard_monomial",
    "evaluation_rank",
    "graded_dim",
    "hyperedge_thresholds",
    "is_admissible",
    "lie_invariant_dim",
    "matrix_to_diagram",
    "max_strict_nesting",
    "partitions",
    "pfaffian",
    "rsk_a",
    "rsk_a_inv",
    "rsk_b",
    "rsk_b_inv",
    "rsk_c",
    "rsk_c_inv",
    "sample_group_element",
    "stable_dim",
    "support_width",
    "weak_nonnesting_number",
]

__version__ = "0.1.0"
