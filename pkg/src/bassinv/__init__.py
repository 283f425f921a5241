"""bassinv: exact invariants of isolated surface singularities over Q.

Computes Milnor and Tjurina numbers, geometric genus, du Bois invariant
tables and Euler characteristics with a fraction-free Buchberger engine,
and applies deformation invariance to decide Bass' question
(NK_0 = 0 yet N^2K_0 != 0) for a given singularity.
"""

from .errors import (BassinvError, GraphFormatError, InconsistentDeductionError,
                     InconsistentInputsError, NoGradedFiberError,
                     NotIsolatedError, NotQuasiHomogeneousError,
                     PolynomialSyntaxError, SingularLocusNotAtOriginError,
                     SmoothInput, StaircaseLimitError, UnknownVariableError,
                     UsageError)
from .groebner import (GroebnerBasis, MonomialOrder, Staircase, buchberger,
                       graded_staircase_count, normal_form, quotient_dimension,
                       staircase, supported_only_at_origin)
from .invariants import (BassVerdict, Bound, DuBoisTable, FamilyReport, Fiber,
                         bass_verdict, build_table, deduce_family)
from .polynomials import (Polynomial, WeightSystem, euler_identity_check,
                          find_weights, parse, partial_derivative,
                          substitute_parameter)
from .resgraph import (ResolutionGraph, genus_sum, intersection_matrix,
                       is_negative_definite, load_graph, loop_count)
from .singularity import (SingularityProfile, analyze, geometric_genus_qh,
                          jacobian_ideal, milnor_number, tjurina_number)

__version__ = "0.1.0"
