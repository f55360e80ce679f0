"""Exact-arithmetic Coxeter group toolkit with verification suites.

The package decides every geometric predicate (root positivity, word
reducedness, form signs) in the exact field generated by the group's
edge labels, and ships a CLI that re-verifies the combinatorial
properties of Coxeter-element powers and sink-flip sequences on a
catalog of finite, affine, and indefinite groups.
"""

from .algebraic import AlgReal, FieldContext, arith, make_field_context, sign, two_cos_pi_over
from .context import (
    AFFINE,
    FINITE,
    INDEFINITE,
    CoxeterMatrix,
    DynkinDiagram,
    GroupContext,
    build_context,
    classify,
    diameter,
    is_irreducible,
)
from .errors import CoxeterInputError, PreconditionError
from .omega import OmegaForm, build_omega, check_equivariance, check_initial_final_signs, check_order_signs, eval_omega
from .presets import PRESETS, load_group_file, preset_context, preset_names, resolve_group
from .reflection import (
    Element,
    demazure_product,
    is_inversion,
    is_positive_root_vector,
    is_reduced,
    length,
    longest_element,
    reduced_word_of,
    reflect_simple,
    reflection_sequence,
    word_to_element,
)
from .report import CheckResult, VerificationReport
from .sinkflip import (
    AdmissibleSeq,
    Orientation,
    commutation_equivalent,
    coxeter_word_of_orientation,
    enumerate_admissible,
    flip_sink,
    is_admissible,
    orientation_of_coxeter_word,
    phi,
    poset_leq,
    sinks,
)

__version__ = "0.1.0"
