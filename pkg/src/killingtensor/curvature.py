"""Algebraic curvature tensors and the representations used as inputs.

Two equivalent encodings of the same irreducible symmetry class are used
side by side and converted into each other:

* :class:`CurvatureTensor` — slots ordered ``(a1, b1, a2, b2)``:
  antisymmetric in each pair, symmetric under pair exchange, cyclic sum
  over the last three slots vanishing;
* :class:`SymCurvatureTensor` — slots ordered ``(a1, a2, b1, b2)``:
  symmetric in each pair, symmetric under pair exchange, cyclic sum over
  the last three slots vanishing.

An order-2 symmetric form ``h`` enters through the Kulkarni–Nomizu
product ``⊘``, and the module builds the standard input families: the
curvature representation of the metric itself, the family attached to an
endomorphism (the structure tensor behind special conformal Killing
tensors), and the three-parameter family ``λ2 h⊘h + λ1 h⊘g + λ0 g⊘g``.

Validation failures raise :class:`~killingtensor.errors.InvalidArgument`
with a message naming the violated symmetry, so command-line diagnostics
can report exactly which constraint an input file broke.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from ._linalg import determinant
from ._util import coerce_rng, random_fraction
from .errors import InvalidArgument
from .models import ModelKind, ModelSpace
from .symgroup import young_symmetriser
from .tensor import MetricSignature, Scalar, Tensor, as_scalar, tensor_product

__all__ = [
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
    "random_invertible_matrix",
    "random_antisymmetric_matrix",
    "random_curvature",
]

#: Slot map locating tableau labels in the ``(a1, b1, a2, b2)`` slot order.
_CURVATURE_SLOT_OF_LABEL = {1: 1, 2: 3, 3: 2, 4: 4}

#: Adjoint Young symmetriser of the square tableau, built once.
_PROJECTOR_ELEMENT = young_symmetriser([[1, 2], [3, 4]]).adjoint()


def _require_order(tensor: Tensor, order: int, what: str) -> Tensor:
    if not isinstance(tensor, Tensor):
        raise InvalidArgument(f"{what} must be a Tensor, got {type(tensor).__name__}")
    if tensor.order != order:
        raise InvalidArgument(f"{what} must have order {order}, got {tensor.order}")
    return tensor


@dataclass(frozen=True)
class SymmetricForm:
    """An exactly symmetric order-2 tensor (lower indices)."""

    tensor: Tensor

    def __post_init__(self) -> None:
        t = _require_order(self.tensor, 2, "symmetric form")
        if not np.array_equal(t.array, t.array.transpose(1, 0)):
            raise InvalidArgument("symmetric form invalid: matrix is not symmetric")

    @property
    def dim(self) -> int:
        return self.tensor.dim


@dataclass(frozen=True)
class AntisymmetricForm:
    """An exactly antisymmetric order-2 tensor (lower indices)."""

    tensor: Tensor

    def __post_init__(self) -> None:
        t = _require_order(self.tensor, 2, "antisymmetric form")
        if not np.array_equal(t.array, -t.array.transpose(1, 0)):
            raise InvalidArgument("antisymmetric form invalid: matrix is not antisymmetric")

    @property
    def dim(self) -> int:
        return self.tensor.dim


def _cyclic_last_three(arr: np.ndarray) -> np.ndarray:
    """Sum of the three cyclic rotations of the last three of four axes."""
    return arr + arr.transpose(0, 2, 3, 1) + arr.transpose(0, 3, 1, 2)


class _FourTensorWrapper:
    """Shared behaviour of the two curvature-class encodings."""

    __slots__ = ("_tensor",)

    _CLASS_NAME = "curvature-class tensor"

    def __init__(self, tensor: Tensor) -> None:
        t = _require_order(tensor, 4, self._CLASS_NAME)
        self._validate(t.array)
        self._tensor = t

    def _validate(self, arr: np.ndarray) -> None:
        raise NotImplementedError

    @property
    def tensor(self) -> Tensor:
        return self._tensor

    @property
    def dim(self) -> int:
        return self._tensor.dim

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, type(self)):
            return NotImplemented
        return self._tensor == other._tensor

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "_FourTensorWrapper") -> "_FourTensorWrapper":
        if type(other) is not type(self):
            return NotImplemented
        return type(self)(self._tensor + other.tensor)

    def __sub__(self, other: "_FourTensorWrapper") -> "_FourTensorWrapper":
        if type(other) is not type(self):
            return NotImplemented
        return type(self)(self._tensor - other.tensor)

    def __neg__(self) -> "_FourTensorWrapper":
        return type(self)(-self._tensor)

    def __mul__(self, scalar: object) -> "_FourTensorWrapper":
        return type(self)(self._tensor * as_scalar(scalar))  # type: ignore[arg-type]

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self._tensor.is_zero()

    def __repr__(self) -> str:
        return f"{type(self).__name__}(dim={self.dim}, nonzero={self._tensor.nonzero_count()})"


class CurvatureTensor(_FourTensorWrapper):
    """Curvature-class tensor in the slot order ``(a1, b1, a2, b2)``.

    Validated symmetries: antisymmetry within each index pair, symmetry
    under exchanging the pairs, and the vanishing cyclic sum over the
    last three slots.
    """

    _CLASS_NAME = "curvature tensor"

    def _validate(self, arr: np.ndarray) -> None:
        if not np.array_equal(arr, -arr.transpose(1, 0, 2, 3)):
            raise InvalidArgument(
                "curvature tensor invalid: not antisymmetric in the first index pair"
            )
        if not np.array_equal(arr, -arr.transpose(0, 1, 3, 2)):
            raise InvalidArgument(
                "curvature tensor invalid: not antisymmetric in the second index pair"
            )
        if not np.array_equal(arr, arr.transpose(2, 3, 0, 1)):
            raise InvalidArgument(
                "curvature tensor invalid: index pairs do not exchange symmetrically"
            )
        if _cyclic_last_three(arr).any():
            raise InvalidArgument(
                "curvature tensor invalid: cyclic sum over the last three indices does not vanish"
            )


class SymCurvatureTensor(_FourTensorWrapper):
    """Curvature-class tensor in the slot order ``(a1, a2, b1, b2)``.

    Validated symmetries: symmetry within each index pair, symmetry
    under exchanging the pairs, and the vanishing cyclic sum over the
    last three slots.
    """

    _CLASS_NAME = "symmetric-class curvature tensor"

    def _validate(self, arr: np.ndarray) -> None:
        if not np.array_equal(arr, arr.transpose(1, 0, 2, 3)):
            raise InvalidArgument(
                "symmetric-class tensor invalid: not symmetric in the first index pair"
            )
        if not np.array_equal(arr, arr.transpose(0, 1, 3, 2)):
            raise InvalidArgument(
                "symmetric-class tensor invalid: not symmetric in the second index pair"
            )
        if not np.array_equal(arr, arr.transpose(2, 3, 0, 1)):
            raise InvalidArgument(
                "symmetric-class tensor invalid: index pairs do not exchange symmetrically"
            )
        if _cyclic_last_three(arr).any():
            raise InvalidArgument(
                "symmetric-class tensor invalid: cyclic sum over the last three indices does not vanish"
            )


# -- products and conversions -----------------------------------------


def _form_tensor(form: SymmetricForm | Tensor, what: str) -> Tensor:
    tensor = form.tensor if isinstance(form, SymmetricForm) else form
    return _require_order(tensor, 2, what)


def kulkarni_nomizu(h: SymmetricForm | Tensor, k: SymmetricForm | Tensor) -> CurvatureTensor:
    """Kulkarni–Nomizu product ``h ⊘ k`` in the ``(a1, b1, a2, b2)`` slot order.

    ``(h ⊘ k)[a1, b1, a2, b2] = h[a1, a2] k[b1, b2] − h[a1, b2] k[b1, a2]
    − h[b1, a2] k[a1, b2] + h[b1, b2] k[a1, a2]``.
    """
    ht = _form_tensor(h, "left factor of the Kulkarni–Nomizu product")
    kt = _form_tensor(k, "right factor of the Kulkarni–Nomizu product")
    if ht.dim != kt.dim:
        raise InvalidArgument("Kulkarni–Nomizu factors must share a dimension")
    outer = np.multiply.outer(ht.array, kt.array)  # outer[a, b, c, d] = h[a,b] k[c,d]
    # result[i1,i2,i3,i4] = outer[i1,i3,i2,i4] − outer[i1,i4,i2,i3]
    #                     − outer[i2,i3,i1,i4] + outer[i2,i4,i1,i3]
    arr = (
        outer.transpose(0, 2, 1, 3)
        - outer.transpose(0, 2, 3, 1)
        - outer.transpose(2, 0, 1, 3)
        + outer.transpose(2, 0, 3, 1)
    )
    return CurvatureTensor(Tensor(arr, dim=ht.dim))


def r_to_s(R: CurvatureTensor) -> SymCurvatureTensor:
    """Pass from the ``(a1, b1, a2, b2)`` encoding to ``(a1, a2, b1, b2)``.

    ``S[a1, a2, b1, b2] = R[a1, b1, a2, b2] + R[a1, b2, a2, b1]``.
    """
    arr = R.tensor.array
    out = arr.transpose(0, 2, 1, 3) + arr.transpose(0, 2, 3, 1)
    return SymCurvatureTensor(Tensor(out, dim=R.dim))


def s_to_r(S: SymCurvatureTensor) -> CurvatureTensor:
    """Inverse of :func:`r_to_s`:
    ``R[a1, b1, a2, b2] = (S[a1, a2, b1, b2] − S[a1, b2, b1, a2]) / 3``.
    """
    arr = S.tensor.array
    out = (arr.transpose(0, 2, 1, 3) - arr.transpose(0, 2, 3, 1)) * Fraction(1, 3)
    return CurvatureTensor(Tensor(out, dim=S.dim))


def project_to_curvature(tensor: Tensor) -> CurvatureTensor:
    """Project an arbitrary order-4 tensor onto the curvature class.

    Applies the adjoint Young symmetriser of the square tableau, with
    labels located at slots ``(a1, b1, a2, b2)``, scaled by ``1/12``.
    Tensors already in the class are reproduced unchanged.
    """
    t = _require_order(tensor, 4, "projection input")
    projected = _PROJECTOR_ELEMENT.apply(t, _CURVATURE_SLOT_OF_LABEL) * Fraction(1, 12)
    return CurvatureTensor(projected)


def scalar_curvature(R: CurvatureTensor, signature: MetricSignature | None = None) -> Fraction:
    """Full trace ``g^{a1 a2} g^{b1 b2} R[a1, b1, a2, b2]``."""
    sig = signature if signature is not None else MetricSignature.euclidean(R.dim)
    if sig.dim != R.dim:
        raise InvalidArgument("signature dimension does not match the tensor")
    ginv = sig.inverse_metric().array
    first = np.tensordot(R.tensor.array, ginv, axes=([0, 2], [0, 1]))  # slots (b1, b2)
    total = np.tensordot(first, ginv, axes=([0, 1], [0, 1]))
    return total[()]


# -- standard representations -----------------------------------------


def _lower_vector(signature: MetricSignature, vector: Tensor) -> Tensor:
    diag = signature.diagonal()
    return Tensor.from_nested([diag[i] * vector[(i,)] for i in range(signature.dim)])


def metric_rep(model: ModelSpace) -> CurvatureTensor:
    """Curvature representation of the metric Killing tensor ``g`` itself.

    On the sphere this is ``(1/2) g ⊘ g`` (the constant-curvature
    tensor).  On the flat model it is ``(u♭ ⊗ u♭) ⊘ g`` with
    ``u♭ = g·u`` the lowered height vector, which reproduces the metric
    under point evaluation on the hyperplane.
    """
    g = model.metric()
    if model.kind is ModelKind.SPHERE:
        return kulkarni_nomizu(g, g) * Fraction(1, 2)
    u = model.height_vector
    assert u is not None
    u_flat = _lower_vector(model.signature, u)
    return kulkarni_nomizu(tensor_product(u_flat, u_flat), g)


def benenti_rep(model: ModelSpace, A: Tensor) -> CurvatureTensor:
    """Curvature representation of the Killing tensor attached to an
    endomorphism ``A`` (special conformal / Benenti family).

    With ``m = AᵀgA`` the pull-back of the metric along ``A`` (as a
    matrix of lower indices, ``m[a,b] = g[c,d] A[c,a] A[d,b]``):

    * sphere: ``(1/2) m ⊘ m``;
    * flat model: ``(φ ⊗ φ) ⊘ m`` where ``φ[a] = u♭[c] A[c,a]``.
    """
    At = _require_order(A, 2, "endomorphism A")
    if At.dim != model.dim:
        raise InvalidArgument("endomorphism dimension does not match the model")
    g = model.metric().array
    m_arr = np.tensordot(np.tensordot(g, At.array, axes=([0], [0])), At.array, axes=([0], [0]))
    m = Tensor(m_arr, dim=model.dim)
    if model.kind is ModelKind.SPHERE:
        return kulkarni_nomizu(m, m) * Fraction(1, 2)
    u = model.height_vector
    assert u is not None
    u_flat = _lower_vector(model.signature, u)
    phi_arr = np.tensordot(u_flat.array, At.array, axes=([0], [0]))
    phi = Tensor(phi_arr, dim=model.dim)
    return kulkarni_nomizu(tensor_product(phi, phi), m)


def family_rep(
    h: SymmetricForm | Tensor,
    lam0: Scalar | int | str,
    lam1: Scalar | int | str,
    lam2: Scalar | int | str,
    signature: MetricSignature | None = None,
) -> CurvatureTensor:
    """The three-parameter family ``λ2 h⊘h + λ1 h⊘g + λ0 g⊘g``.

    ``g`` is the ambient metric of ``signature`` (Euclidean by default).
    Every member is integrable on every model; this family is the main
    structured positive-control input.
    """
    ht = _form_tensor(h, "symmetric form h")
    sig = signature if signature is not None else MetricSignature.euclidean(ht.dim)
    if sig.dim != ht.dim:
        raise InvalidArgument("signature dimension does not match h")
    g = sig.metric()
    l0, l1, l2 = as_scalar(lam0), as_scalar(lam1), as_scalar(lam2)
    total = (
        kulkarni_nomizu(ht, ht) * l2
        + kulkarni_nomizu(ht, g) * l1
        + kulkarni_nomizu(g, g) * l0
    )
    return total


# -- random generators ------------------------------------------------


def random_symmetric_form(
    dim: int,
    rng: random.Random | int | None = None,
    *,
    bound: int = 9,
) -> SymmetricForm:
    """Random exactly symmetric order-2 tensor with small rational entries."""
    generator = coerce_rng(rng)
    arr = np.empty((dim, dim), dtype=object)
    for i in range(dim):
        for j in range(i, dim):
            value = random_fraction(generator, bound)
            arr[i, j] = value
            arr[j, i] = value
    return SymmetricForm(Tensor(arr, dim=dim))


def random_antisymmetric_matrix(
    dim: int,
    rng: random.Random | int | None = None,
    *,
    bound: int = 9,
) -> AntisymmetricForm:
    """Random exactly antisymmetric order-2 tensor."""
    generator = coerce_rng(rng)
    arr = np.empty((dim, dim), dtype=object)
    arr.fill(Fraction(0))
    for i in range(dim):
        for j in range(i + 1, dim):
            value = random_fraction(generator, bound)
            arr[i, j] = value
            arr[j, i] = -value
    return AntisymmetricForm(Tensor(arr, dim=dim))


def random_invertible_matrix(
    dim: int,
    rng: random.Random | int | None = None,
    *,
    bound: int = 9,
    max_attempts: int = 100,
) -> Tensor:
    """Random order-2 tensor with non-zero determinant (exact check)."""
    generator = coerce_rng(rng)
    for _ in range(max_attempts):
        rows = [[random_fraction(generator, bound) for _ in range(dim)] for _ in range(dim)]
        if determinant(rows) != 0:
            return Tensor.from_nested(rows)
    raise InvalidArgument(f"failed to draw an invertible matrix in {max_attempts} attempts")


def random_curvature(
    dim: int,
    rng: random.Random | int | None = None,
    *,
    bound: int = 9,
) -> CurvatureTensor:
    """Random member of the curvature class: a random order-4 tensor
    pushed through :func:`project_to_curvature`."""
    generator = coerce_rng(rng)
    arr = np.empty((dim,) * 4, dtype=object)
    for idx in np.ndindex(arr.shape):
        arr[idx] = random_fraction(generator, bound)
    return project_to_curvature(Tensor(arr, dim=dim))


def curvature_slot_of_label() -> dict[int, int]:
    """Copy of the tableau-label placement used by :func:`project_to_curvature`."""
    return dict(_CURVATURE_SLOT_OF_LABEL)
