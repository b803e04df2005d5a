"""Support varieties of graded modules over complete intersections
k[x_1..x_n]/(f_1..f_c): exact mod-p arithmetic, Groebner engines, minimal
free resolutions, the degree-2 operator action on Ext, window annihilators,
and the variety-directed constructions (hypersurface cuts, realization,
idempotent splitting, the disjoint-split decomposition check)."""

from .errors import (
    CivarError,
    InputError,
    InternalError,
    PremiseError,
    ResourceBudgetError,
    StabilizationError,
    VerificationError,
)
from .arith import DEGREVLEX, Poly, PolyRing, elimination_order
from .groebner import (
    Budgets,
    FreeElt,
    GroebnerBasis,
    SubmoduleOracle,
    configure_budgets,
    groebner_basis,
    ideal_dimension,
    ideal_ops,
    normal_form,
    radical_membership,
    syzygies,
)
from .resolve import (
    ModulePresentation,
    Resolution,
    RingSpec,
    VectorModel,
    direct_sum,
    free_module,
    hilbert_function,
    is_mcm,
    present_from_vector_model,
    present_module,
    prune_units,
    residue_field,
    resolve_min,
    syzygy_module,
    vector_model,
)
from .cohomology import (
    ExtKModule,
    VarietyIdeal,
    annihilator_window,
    complexity,
    ext_k_module,
    lift_and_operators,
    operator_columns,
    support_variety,
)
from .construct import (
    CarlsonResult,
    DecompositionResult,
    ExtElement,
    check_carlson,
    decompose,
    phi,
    pushout_cut,
    realize,
)

__version__ = "0.1.0"

__all__ = [
    "CivarError",
    "InputError",
    "InternalError",
    "PremiseError",
    "ResourceBudgetError",
    "StabilizationError",
    "VerificationError",
    "DEGREVLEX",
    "Poly",
    "PolyRing",
    "elimination_order",
    "Budgets",
    "FreeElt",
    "GroebnerBasis",
    "SubmoduleOracle",
    "configure_budgets",
    "groebner_basis",
    "ideal_dimension",
    "ideal_ops",
    "normal_form",
    "radical_membership",
    "syzygies",
    "ModulePresentation",
    "Resolution",
    "RingSpec",
    "VectorModel",
    "direct_sum",
    "free_module",
    "hilbert_function",
    "is_mcm",
    "present_from_vector_model",
    "present_module",
    "prune_units",
    "residue_field",
    "resolve_min",
    "syzygy_module",
    "vector_model",
    "ExtKModule",
    "VarietyIdeal",
    "annihilator_window",
    "complexity",
    "ext_k_module",
    "lift_and_operators",
    "operator_columns",
    "support_variety",
    "CarlsonResult",
    "DecompositionResult",
    "ExtElement",
    "check_carlson",
    "decompose",
    "phi",
    "pushout_cut",
    "realize",
]
