"""Face monoids of finite Coxeter complexes (types A and C), the Steinberg
torus as a right module over them, and the induced module of affine descent
classes over the descent ring — all in exact integer arithmetic, with
brute-force verification suites at small rank.
"""

from .errors import (
    BudgetExceededError,
    FamilyMismatchError,
    NotInSpanError,
    NotRealizableError,
    SteintorusError,
    ValidationError,
)
from .weyl import (
    ColorSet,
    Family,
    WeylElement,
    affine_descent_set,
    descent_set,
    enumerate_group,
    identity,
    inverse,
)
from .coxfaces import (
    FiniteSignVector,
    SetComposition,
    SymComposition,
    count_faces,
    enumerate_faces,
    sign_vector,
    tits_product,
    unit_face,
    w_of_face,
)
from .torusfaces import (
    SpinNecklace,
    SplitNecklace,
    SymNecklace,
    contract_edge,
    count_torus_faces,
    enumerate_torus_faces,
    make_spin,
    module_action,
    split,
    w_of_torus_face,
)
from .affine_oracle import (
    CompactSignVector,
    CorootVector,
    lift,
    oracle_act,
    project,
    translate,
    w_of_affine_face,
)
from .descent_algebra import (
    FaceSum,
    GroupRingElement,
    basis_element,
    express_in_basis,
    face_sum_product,
    module_table,
    multiply,
    orbit_sum,
    psi,
    solomon_table,
    verify,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
