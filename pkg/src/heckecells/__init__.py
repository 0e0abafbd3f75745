"""Exact Kazhdan-Lusztig data for weighted Coxeter systems of rank <= 3.

The package computes, in exact arithmetic, the unequal-parameter Hecke
algebra of a weighted Coxeter system (T and KL bases, structure
constants), the predicted a-function and cell machinery built from
distinguished elements, truncated quotient algebras, and the critical
hyperplane arrangements in weight space, together with desk-scale
checkers for the fifteen positivity-style conjectural statements.
"""

from .coxeter import INFINITY, CoxeterSystem, WeightFunction
from .laurent import NEG_INF, LaurentPoly
from .hecke import HeckeAlgebra, HeckeElt
from .cells import DSet, cell_graph, right_cell_comparison, two_sided_classifier
from .afun import (
    ASource,
    ExactA,
    HSweep,
    PChecker,
    PredictedA,
    a_ball,
    check_P,
    delta_n,
    distinguished_ball,
    exact_a_table,
    gamma_coeff,
)
from .quotient import (
    EXPANSION_CASES,
    TruncatedAlgebra,
    all_expansion_case_ids,
    verify_expansion,
)
from .dihedral import LEMMA_IDS, dihedral_sweep, sweep_grid
from .params import (
    CriticalLocus,
    LinearForm,
    TriplePoint,
    aprime_form,
    critical_lines_2d,
    critical_values_1d,
    d_levels,
    export_arrangement,
    triple_points,
)

__version__ = "0.1.0"

__all__ = [
    "INFINITY", "NEG_INF", "CoxeterSystem", "WeightFunction",
    "LaurentPoly", "HeckeAlgebra", "HeckeElt",
    "DSet", "cell_graph", "right_cell_comparison", "two_sided_classifier",
    "ASource", "ExactA", "PredictedA", "HSweep", "PChecker",
    "a_ball", "check_P", "delta_n", "distinguished_ball", "exact_a_table",
    "gamma_coeff",
    "EXPANSION_CASES", "TruncatedAlgebra", "all_expansion_case_ids",
    "verify_expansion",
    "LEMMA_IDS", "dihedral_sweep", "sweep_grid",
    "CriticalLocus", "LinearForm", "TriplePoint", "aprime_form",
    "critical_lines_2d", "critical_values_1d", "d_levels",
    "export_arrangement", "triple_points",
]
