"""Exact integrability tests for valence-two Killing tensors on
constant-curvature model spaces.

Killing tensors on the standard sphere and flat models are encoded as
algebraic curvature tensors (form "R") or their fully-traced symmetric
counterparts (form "S").  Integrability of the induced Killing tensor —
existence of a full commuting family — is equivalent to two exact
algebraic conditions on the encoding tensor; :func:`check` evaluates
them over the rationals, and :func:`integrable_oracle` cross-validates
the verdict by evaluating the classical torsion obstructions at random
rational points of the embedded model.

All arithmetic is exact (:class:`fractions.Fraction`); no floating
point enters any verdict.
"""

from .errors import (
    IdentityViolation,
    InvalidArgument,
    SamplingFailure,
    UnsupportedForm,
)
from .tensor import (
    MetricSignature,
    Scalar,
    Tensor,
    antisymmetrise_slots,
    as_scalar,
    contract,
    contract_vector,
    permute_slots,
    symmetrise_slots,
    tensor_product,
)
from .symgroup import (
    GroupAlgebraElement,
    Permutation,
    YoungFrame,
    YoungTableau,
    lr_decompose,
    partitions,
    young_symmetriser,
)
from .curvature import (
    AntisymmetricForm,
    CurvatureTensor,
    SymCurvatureTensor,
    SymmetricForm,
    benenti_rep,
    family_rep,
    kulkarni_nomizu,
    metric_rep,
    project_to_curvature,
    r_to_s,
    random_antisymmetric_matrix,
    random_curvature,
    random_invertible_matrix,
    random_symmetric_form,
    s_to_r,
    scalar_curvature,
)
from .models import (
    ModelKind,
    ModelPoint,
    ModelSpace,
    TangentBasis,
    flat_point_from_parameter,
    killing_cov_deriv,
    killing_eval,
    killing_vector_eval,
    random_tangent_vector,
    sample_point,
    sphere_point_from_parameter,
    tangent_basis,
    tangent_basis_from_vectors,
)
from .integrability import (
    ConditionForm1,
    ConditionForm2,
    IntegrabilityReport,
    check,
    condition1_residual,
    condition2_residual,
    condition3_residual,
    verify_identity_suite,
)
from .oracle import (
    OracleReport,
    PointFrameData,
    compute_point_data,
    integrable_oracle,
    tns_residuals,
)
from . import io

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "InvalidArgument",
    "UnsupportedForm",
    "SamplingFailure",
    "IdentityViolation",
    # exact multilinear algebra
    "Scalar",
    "as_scalar",
    "MetricSignature",
    "Tensor",
    "tensor_product",
    "permute_slots",
    "contract",
    "contract_vector",
    "symmetrise_slots",
    "antisymmetrise_slots",
    # symmetric group machinery
    "Permutation",
    "GroupAlgebraElement",
    "YoungFrame",
    "YoungTableau",
    "young_symmetriser",
    "partitions",
    "lr_decompose",
    # curvature classes and representatives
    "SymmetricForm",
    "AntisymmetricForm",
    "CurvatureTensor",
    "SymCurvatureTensor",
    "kulkarni_nomizu",
    "r_to_s",
    "s_to_r",
    "project_to_curvature",
    "metric_rep",
    "benenti_rep",
    "family_rep",
    "scalar_curvature",
    "random_symmetric_form",
    "random_antisymmetric_matrix",
    "random_invertible_matrix",
    "random_curvature",
    # model spaces
    "ModelKind",
    "ModelSpace",
    "ModelPoint",
    "TangentBasis",
    "sphere_point_from_parameter",
    "flat_point_from_parameter",
    "sample_point",
    "tangent_basis",
    "tangent_basis_from_vectors",
    "random_tangent_vector",
    "killing_eval",
    "killing_vector_eval",
    "killing_cov_deriv",
    # integrability conditions
    "ConditionForm1",
    "ConditionForm2",
    "IntegrabilityReport",
    "condition1_residual",
    "condition2_residual",
    "condition3_residual",
    "verify_identity_suite",
    "check",
    # pointwise oracle
    "PointFrameData",
    "OracleReport",
    "compute_point_data",
    "tns_residuals",
    "integrable_oracle",
    # file formats
    "io",
]
