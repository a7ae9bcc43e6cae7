"""Exact-arithmetic ternary algebras and their graded superalgebra
correspondence."""

from .linalg import (
    Matrix,
    Subspace,
    frac,
    rref,
    solve_linear,
    subspace_close,
    unit_vector,
    vector,
)
from .superpoly import (
    LinearChange,
    SuperPoly,
    Universe,
    check_form_condition,
    default_poisson_involution,
    hodge_dual,
    monomial_basis,
    poisson,
    poisson_universe,
)
from .trisystem import (
    AxiomReport,
    GuardrailError,
    LinearMap3,
    SimplicityKind,
    SimplicityResult,
    TriAlgebra,
    TriEvaluator,
    check_intertwiner,
    check_n5,
    check_n6,
    check_n8,
    direct_sum,
    find_intertwiner,
    left_op,
    simplicity,
    transform,
)
from .catalog import (
    a3_st,
    a3_t,
    c3,
    c3_star,
    grassmann_n5,
    o3,
    p3,
    s3,
    skew_star_bracket,
    star_bracket,
    sw3,
    symplectic_j,
    symplectic_transpose,
    w3,
)
from .superlie import (
    GradedConjugation,
    GradedSuperAlgebra,
    L0Element,
    LieOf,
    MatrixModel,
    SuperAlgebra,
    bracket_from_conjugation,
    check_generation,
    check_ideal_property,
    check_super_jacobi,
    check_transitivity,
    lie_of,
    osp_model,
    sigma1,
    sigma2,
    sigma_osp,
    sl_model,
    superalgebra_simplicity,
    verify_conjugation,
)
from .n5 import (
    BilinearForm,
    check_invariant_form,
    n5_from_superalgebra,
    reconstruct_g,
    reduce_n6_to_n5,
)

__version__ = "0.1.0"
