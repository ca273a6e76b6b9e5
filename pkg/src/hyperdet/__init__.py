"""Exact hyperdeterminants of 2 x k x (k+1) hypermatrices."""
from .determinant import (
    DetResult,
    eval_consistency_check,
    hyperdeterminant,
    symbolic_hyperdet,
    variable_names,
)
from .fields import GF, QQ, Field, FieldError, PrimeField, PrimeFieldScalar, RationalField, invert, scalar_pow
from .hypermatrix import (
    DimensionMismatch,
    GroupElement,
    Hypermatrix,
    IndexOutOfRange,
    PencilMatrix,
    ZeroScale,
    apply_group,
    elementary_op,
    identity_hypermatrix,
    matrix_det,
    matrix_rank,
    multilinear_form_eval,
    pencil,
)
from .oracles import (
    BudgetExceeded,
    CountReport,
    count_enumerate,
    count_formula,
    degenerate_pencil_oracle,
    gl_order,
    q_factorial,
    q_int,
)
from .polynomials import BinaryForm, SparsePolynomial, binary_form_common_root, multivariate_gcd, parse_polynomial
from .rational_functions import InfeasibleError, RationalFunction, RationalFunctionField
from .reduction import (
    Degenerate,
    OperationRecord,
    ReductionOutcome,
    Status,
    canonicalize,
    double_gaussian,
    is_trivial_in_G,
    reduce_first_slice,
    replay,
    transporter,
)

__version__ = "0.1.0"
