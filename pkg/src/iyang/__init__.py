"""Exact symbolic checks for a polynomial realization of a twisted Yangian.

The package builds the weight-graded module of hyperoctahedral-invariant
polynomials, realizes the generators H_{i,r} and B_{i,r} on it, and
verifies the defining relations and the supporting orbit combinatorics
with exact rational arithmetic.  A finite-field flag oracle cross-checks
the combinatorial predictions by brute force.
"""

from .errors import (BadConstantTerm, DenominatorNotCleared, IncompatibleFlags,
                     IndexOutOfRange, InvarianceViolation, IyangError,
                     MirrorViolation, NoUniqueMax, NotAConstant, NotASubgroup,
                     NotDivisible, NotInvariantUnderW1, ParameterMismatch,
                     RepeatedPole, RowColMismatch, ShapeMismatch,
                     ShiftOutOfRange, TooLarge)
from .flags import FqFlag, enum_flags, oracle_compose_set, relpos, standard_flag
from .operators import (MUTATIONS, RepContext, lemma26_constant, lemma53_det,
                        phi_ratfunc)
from .orbits import (OrbitMatrix, WeightVec, blocks_of_matrix, compose_max,
                     compose_set, factorize_elementary, detect_elementary, e_theta,
                     enum_weights, enum_xi, format_matrix, leq_order,
                     parabolic_of_matrix, parabolic_of_weight, parse_matrix,
                     parse_weight)
from .poly import Poly, format_poly, parse_poly
from .ratfunc import RatFunc
from .relations import (RELATION_IDS, TaskResult, build_defect,
                        check_bb_series, check_h_parity, enumerate_tasks,
                        report_to_json, run_suite, verify_task)
from .repspace import (
    ModuleElem, PElem, assert_invariance, basis_elements, orbit_sum_basis,
)
from .scalars import GaussRat
from .series import (SeriesU, ZRatFunc, check_halving_identity,
                     negative_part_series, series_exp, series_log,
                     truncate_negative)
from .symmetry import (CosetSpace, ParabolicSubgroup, SymPartition, WeylElem,
                       coset_reps, coset_sum, format_partition, is_invariant,
                       parse_partition, substitute)

__version__ = "0.1.0"

__all__ = [
    "BadConstantTerm", "CosetSpace", "DenominatorNotCleared", "FqFlag",
    "GaussRat", "IncompatibleFlags", "IndexOutOfRange", "InvarianceViolation",
    "IyangError", "MUTATIONS", "MirrorViolation", "ModuleElem", "NoUniqueMax",
    "NotAConstant", "NotASubgroup", "NotDivisible", "NotInvariantUnderW1",
    "OrbitMatrix", "PElem", "ParabolicSubgroup", "ParameterMismatch", "Poly",
    "RELATION_IDS", "RatFunc", "RepContext", "RepeatedPole", "RowColMismatch",
    "SeriesU", "ShapeMismatch", "ShiftOutOfRange", "SymPartition",
    "TaskResult", "TooLarge", "WeightVec", "WeylElem", "ZRatFunc",
    "assert_invariance", "basis_elements",
    "blocks_of_matrix", "build_defect", "check_bb_series", "check_h_parity",
    "check_halving_identity", "compose_max", "compose_set", "factorize_elementary",
    "coset_reps", "coset_sum", "detect_elementary", "e_theta", "enum_flags",
    "enum_weights", "enum_xi", "enumerate_tasks", "format_matrix",
    "format_partition", "format_poly", "is_invariant", "lemma26_constant",
    "lemma53_det", "leq_order", "negative_part_series", "oracle_compose_set",
    "orbit_sum_basis", "parabolic_of_matrix", "parabolic_of_weight",
    "parse_matrix", "parse_partition", "parse_poly", "parse_weight",
    "phi_ratfunc", "relpos", "report_to_json", "run_suite", "series_exp",
    "series_log", "standard_flag", "substitute", "truncate_negative",
    "verify_task",
]
