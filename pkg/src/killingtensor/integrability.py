"""Algebraic integrability conditions on curvature-class tensors.

A valence-two Killing tensor on a constant-sectional-curvature model is
encoded by an algebraic curvature tensor ``R`` (or its symmetric-class
companion ``S``).  Integrability of the Killing tensor is equivalent to
two purely algebraic conditions on that tensor:

* the *first* condition is quadratic: a symmetry operator annihilates
  the contraction ``gbar^{kl} S_{k a2 b1 b2} S_{l c2 d1 d2}`` (or its
  ``R``-counterpart);
* the *second* condition is cubic: a symmetry operator annihilates a
  double contraction of three copies of the tensor.

Each condition admits several operator forms with a common kernel
(:class:`ConditionForm1`, :class:`ConditionForm2`).  The quartic third
residual (:func:`condition3_residual`) vanishes whenever the first two
conditions hold, and :func:`verify_identity_suite` checks a family of
operator identities that hold for *every* valid symmetric-class tensor,
independent of integrability — a failure there signals an
implementation bug, never bad data.

All arithmetic is exact: tensors are rescaled to integer arrays, the
(anti)symmetrisations run in staged passes with overflow guards, and
results convert back to rational tensors.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

import numpy as np

from ._fastops import (
    canonical_nonzero_count,
    guarded_add,
    guarded_tensordot,
    is_zero_array,
    normalize_array,
    staged_symmetrise,
    to_int_array,
    to_tensor,
)
from ._linalg import determinant
from ._util import coerce_rng
from .curvature import CurvatureTensor, SymCurvatureTensor, r_to_s, s_to_r
from .errors import IdentityViolation, InvalidArgument, UnsupportedForm
from .models import ModelSpace
from .symgroup import GroupAlgebraElement, Permutation, young_symmetriser
from .tensor import Tensor

__all__ = [
    "ConditionForm1",
    "ConditionForm2",
    "IntegrabilityReport",
    "condition1_residual",
    "condition2_residual",
    "condition3_residual",
    "verify_identity_suite",
    "check",
]

KillingInput = Union[CurvatureTensor, SymCurvatureTensor]
GbarLike = Union[ModelSpace, Tensor]


class ConditionForm1(enum.Enum):
    """Equivalent operator forms of the first (quadratic) condition.

    All forms share one kernel; they differ in operand layout and in the
    symmetry operator applied:

    * ``MAIN1`` — antisymmetrise the ``R``-quadratic in its four
      second-pair slots.
    * ``YOUNG_A`` — adjoint hook operator (symmetrise three slots, then
      antisymmetrise four overlapping slots) on the ``S``-quadratic.
    * ``SPLIT_B`` — the split variant: symmetriser and antisymmetriser
      on disjoint slot sets.
    * ``ANTI_C`` — the four-slot antisymmetriser alone.
    * ``HOOK_D`` — the hook operator (antisymmetrise first, then
      symmetrise) on the ``S``-quadratic.
    * ``OMEGA`` — vanishing of the wedge square of the curvature
      2-form; defined only when ``gbar`` is non-degenerate (non-flat
      models).
    """

    MAIN1 = "main1"
    YOUNG_A = "young-a"
    SPLIT_B = "split-b"
    ANTI_C = "anti-c"
    HOOK_D = "hook-d"
    OMEGA = "omega"

    @classmethod
    def parse(cls, value: "ConditionForm1 | str") -> "ConditionForm1":
        return _parse_form(cls, value)


class ConditionForm2(enum.Enum):
    """Equivalent operator forms of the second (cubic) condition.

    * ``MAIN2`` — symmetrise the four first-pair slots and
      antisymmetrise the four second-pair slots of the ``R``-cubic.
    * ``KS2_HOOK_YIN`` — adjoint hook operator (five-slot symmetriser,
      then overlapping four-slot antisymmetriser) on the ``S``-cubic.
    * ``KS2_44_BOTH`` — disjoint four-slot symmetriser and four-slot
      antisymmetriser on the ``S``-cubic.

    The equivalence of these forms is guaranteed only for inputs that
    already satisfy the first condition.
    """

    MAIN2 = "main2"
    KS2_HOOK_YIN = "ks2-hook-yin"
    KS2_44_BOTH = "ks2-44-both"

    @classmethod
    def parse(cls, value: "ConditionForm2 | str") -> "ConditionForm2":
        return _parse_form(cls, value)


def _parse_form(cls, value):
    if isinstance(value, cls):
        return value
    if isinstance(value, str):
        key = value.strip().lower().replace("_", "-")
        for member in cls:
            if key == member.value or key == member.name.lower().replace("_", "-"):
                return member
    raise InvalidArgument(
        f"unknown {cls.__name__} {value!r}; expected one of "
        + ", ".join(m.value for m in cls)
    )


def _as_s(K: KillingInput) -> SymCurvatureTensor:
    if isinstance(K, SymCurvatureTensor):
        return K
    if isinstance(K, CurvatureTensor):
        return r_to_s(K)
    raise InvalidArgument(
        "expected a CurvatureTensor or SymCurvatureTensor, got "
        + type(K).__name__
    )


def _as_r(K: KillingInput) -> CurvatureTensor:
    if isinstance(K, CurvatureTensor):
        return K
    if isinstance(K, SymCurvatureTensor):
        return s_to_r(K)
    raise InvalidArgument(
        "expected a CurvatureTensor or SymCurvatureTensor, got "
        + type(K).__name__
    )


def _resolve_gbar(gbar: GbarLike, dim: int) -> Tensor:
    """Accept a model space or an explicit order-2 contraction tensor."""
    if isinstance(gbar, ModelSpace):
        tensor = gbar.gbar()
    elif isinstance(gbar, Tensor):
        tensor = gbar
    else:
        raise InvalidArgument(
            "gbar must be a ModelSpace or an order-2 Tensor, got "
            + type(gbar).__name__
        )
    if tensor.order != 2:
        raise InvalidArgument(f"gbar tensor must have order 2, got {tensor.order}")
    if tensor.dim != dim:
        raise InvalidArgument(
            f"dimension mismatch: input tensor has dim {dim}, gbar has {tensor.dim}"
        )
    return tensor


# ---------------------------------------------------------------------------
# Operator tables.
#
# Each entry is a sequence of staged slot operations applied in order:
# (+1, axes) is an unnormalised symmetrisation over the 0-based axes,
# (−1, axes) an unnormalised antisymmetrisation.  The support tables list
# the slot groups under which the finished residual is guaranteed
# (anti)symmetric — the groups of the *last* operator plus any earlier
# operator acting on disjoint slots.
# ---------------------------------------------------------------------------

_Ops = tuple[tuple[int, tuple[int, ...]], ...]
_Groups = tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]

# Quadratic S-operand layout: gbar^{kl} S_{k a2 b1 b2} S_{l c2 d1 d2}
# with free slots (a2, b1, b2, c2, d1, d2) = axes 0..5.
_COND1_S_OPS: dict[ConditionForm1, _Ops] = {
    ConditionForm1.YOUNG_A: ((1, (2, 1, 4)), (-1, (2, 3, 5, 0))),
    ConditionForm1.SPLIT_B: ((1, (2, 1, 4)), (-1, (3, 5, 0))),
    ConditionForm1.ANTI_C: ((-1, (2, 3, 5, 0)),),
    ConditionForm1.HOOK_D: ((-1, (2, 3, 5, 0)), (1, (2, 1, 4))),
}
_COND1_S_GROUPS: dict[ConditionForm1, _Groups] = {
    ConditionForm1.YOUNG_A: ((), ((0, 2, 3, 5),)),
    ConditionForm1.SPLIT_B: (((1, 2, 4),), ((0, 3, 5),)),
    ConditionForm1.ANTI_C: ((), ((0, 2, 3, 5),)),
    ConditionForm1.HOOK_D: (((1, 2, 4),), ()),
}

# Quadratic R-operand layout: gbar^{kl} R_{k b1 a2 b2} R_{l d1 c2 d2}
# with free slots (b1, a2, b2, d1, c2, d2) = axes 0..5.
_MAIN1_OPS: _Ops = ((-1, (1, 2, 4, 5)),)
_MAIN1_GROUPS: _Groups = ((), ((1, 2, 4, 5),))

# Wedge-square layout: (a, i, j, b, k, l) with endomorphism slots (a, b)
# and form slots (i, j, k, l).
_OMEGA_OPS: _Ops = ((-1, (1, 2, 4, 5)),)
_OMEGA_GROUPS: _Groups = ((), ((1, 2, 4, 5),))

# Cubic R-operand aligned to (a1, b1, c1, d1, a2, b2, c2, d2).
_MAIN2_OPS: _Ops = ((-1, (4, 5, 6, 7)), (1, (0, 1, 2, 3)))
_MAIN2_GROUPS: _Groups = (((0, 1, 2, 3),), ((4, 5, 6, 7),))

# Cubic S-operand layout (c2, d1, d2, b1, b2, f2, e1, e2) = axes 0..7:
# gbar^{mn} gbar^{pq} S_{m c2 d1 d2} S_{n b1 p b2} S_{q f2 e1 e2}.
_KS2_HOOK_YIN_OPS: _Ops = ((1, (4, 3, 1, 6, 7)), (-1, (4, 0, 2, 5)))
_KS2_HOOK_YIN_GROUPS: _Groups = ((), ((0, 2, 4, 5),))

# Same array read as (c2, d1, d2, e1, e2, f2, b1, b2):
# gbar^{mn} gbar^{pq} S_{m c2 d1 d2} S_{n e1 p e2} S_{q f2 b1 b2}.
_KS2_44_BOTH_OPS: _Ops = ((1, (6, 1, 3, 4)), (-1, (7, 0, 2, 5)))
_KS2_44_BOTH_GROUPS: _Groups = (((1, 3, 4, 6),), ((0, 2, 5, 7),))

# Cubic R-operand read as (d1, c2, d2, e1, e2, b1, f2, b2):
# gbar^{mn} gbar^{pq} R_{m d1 c2 d2} R_{n e1 p e2} R_{q b1 f2 b2}.
_KR2_OPS: _Ops = ((1, (5, 0, 3, 4)), (-1, (7, 1, 2, 6)))
_KR2_GROUPS: _Groups = (((0, 3, 4, 5),), ((1, 2, 6, 7),))

# Quartic S-operand aligned to (b1, b2, c2, d1, d2, f2, e1, e2, g1, g2).
_COND3_OPS: _Ops = ((1, (1, 0, 3, 6, 7, 8, 9)), (-1, (2, 4, 5)))
_COND3_GROUPS: _Groups = (((0, 1, 3, 6, 7, 8, 9),), ((2, 4, 5),))


def _run_ops(arr: np.ndarray, scale: Fraction, ops: _Ops) -> tuple[np.ndarray, Fraction]:
    for sign, axes in ops:
        arr, scale = normalize_array(arr, scale)
        arr = staged_symmetrise(arr, axes, sign=sign)
    return normalize_array(arr, scale)


# ---------------------------------------------------------------------------
# Operand builders.  Index-name comments track which tensor slot carries
# which index of the defining contraction.
# ---------------------------------------------------------------------------


def _quadratic_s_array(S: SymCurvatureTensor, gbar: Tensor) -> tuple[np.ndarray, Fraction]:
    """gbar^{kl} S_{k a2 b1 b2} S_{l c2 d1 d2} -> (a2,b1,b2,c2,d1,d2)."""
    b_arr, b_scale = to_int_array(gbar)
    s_arr, s_scale = to_int_array(S.tensor)
    bs = guarded_tensordot(b_arr, s_arr, [1], [0])  # (k, c2, d1, d2)
    arr = guarded_tensordot(s_arr, bs, [0], [0])  # (a2, b1, b2, c2, d1, d2)
    return arr, b_scale * s_scale**2


def _quadratic_r_array(R: CurvatureTensor, gbar: Tensor) -> tuple[np.ndarray, Fraction]:
    """gbar^{kl} R_{k b1 a2 b2} R_{l d1 c2 d2} -> (b1,a2,b2,d1,c2,d2)."""
    b_arr, b_scale = to_int_array(gbar)
    r_arr, r_scale = to_int_array(R.tensor)
    br = guarded_tensordot(b_arr, r_arr, [1], [0])  # (k, d1, c2, d2)
    arr = guarded_tensordot(r_arr, br, [0], [0])  # (b1, a2, b2, d1, c2, d2)
    return arr, b_scale * r_scale**2


def _omega_array(R: CurvatureTensor, gbar: Tensor) -> tuple[np.ndarray, Fraction]:
    """Wedge square of the curvature 2-form, upper slot lowered.

    ``R_{a}{}^{m}{}_{ij} R_{m b k l}`` over slots (a, i, j, b, k, l); the
    four form slots (i, j, k, l) are antisymmetrised by the caller.
    """
    dim = gbar.dim
    rows = [[gbar[(i, j)] for j in range(dim)] for i in range(dim)]
    if determinant(rows) == 0:
        raise UnsupportedForm(
            "the wedge-square form requires a non-degenerate gbar "
            "(it is unavailable on flat models)"
        )
    b_arr, b_scale = to_int_array(gbar)
    r_arr, r_scale = to_int_array(R.tensor)
    rg = guarded_tensordot(r_arr, b_arr, [1], [0])  # (a, i, j, m)
    arr = guarded_tensordot(rg, r_arr, [3], [0])  # (a, i, j, b, k, l)
    return arr, b_scale * r_scale**2


def _cubic_r_array(R: CurvatureTensor, gbar: Tensor) -> tuple[np.ndarray, Fraction]:
    """Three-factor R-contraction aligned to (a1,b1,c1,d1,a2,b2,c2,d2).

    ``gbar^{mn} gbar^{pq} R_{m b1 a2 b2} R_{n a1 p c1} R_{q d1 c2 d2}``.
    """
    b_arr, b_scale = to_int_array(gbar)
    r_arr, r_scale = to_int_array(R.tensor)
    br = guarded_tensordot(b_arr, r_arr, [1], [0])  # (m, a1, p, c1) / (p, d1, c2, d2)
    x = guarded_tensordot(r_arr, br, [0], [0])  # (b1, a2, b2, a1, p, c1)
    x, x_scale = normalize_array(x, b_scale * r_scale**2)
    t8 = guarded_tensordot(x, br, [4], [0])  # (b1, a2, b2, a1, c1, d1, c2, d2)
    t8 = t8.transpose(3, 0, 4, 5, 1, 2, 6, 7)  # (a1, b1, c1, d1, a2, b2, c2, d2)
    return t8, x_scale * b_scale * r_scale


def _cubic_s_array(S: SymCurvatureTensor, gbar: Tensor) -> tuple[np.ndarray, Fraction]:
    """Three-factor S-contraction with slots (c2,d1,d2,b1,b2,f2,e1,e2).

    ``gbar^{mn} gbar^{pq} S_{m c2 d1 d2} S_{n b1 p b2} S_{q f2 e1 e2}``;
    reading the same array as (c2,d1,d2,e1,e2,f2,b1,b2) realises the
    variant with the middle factor contracted on its outer pair.
    """
    b_arr, b_scale = to_int_array(gbar)
    s_arr, s_scale = to_int_array(S.tensor)
    bs = guarded_tensordot(b_arr, s_arr, [1], [0])  # (m, b1, p, b2) / (p, f2, e1, e2)
    x = guarded_tensordot(s_arr, bs, [0], [0])  # (c2, d1, d2, b1, p, b2)
    x, x_scale = normalize_array(x, b_scale * s_scale**2)
    u = guarded_tensordot(x, bs, [4], [0])  # (c2, d1, d2, b1, b2, f2, e1, e2)
    return u, x_scale * b_scale * s_scale


def _quartic_s_array(S: SymCurvatureTensor, gbar: Tensor) -> tuple[np.ndarray, Fraction]:
    """Two-term four-factor S-contraction aligned to
    (b1, b2, c2, d1, d2, f2, e1, e2, g1, g2).

    First term: ``gbar^{ij} gbar^{kl} gbar^{mn}
    S_{i k b1 b2} S_{j c2 d1 d2} S_{m f2 e1 e2} S_{n l g1 g2}``;
    second term: the variant with the first factor's contracted pair
    split across slots 1 and 3 (``S_{i c2 b1 b2} S_{j d1 k d2} ...``).
    Both terms carry the same integer scale by construction, so they are
    added before any content reduction.
    """
    b_arr, b_scale = to_int_array(gbar)
    s_arr, s_scale = to_int_array(S.tensor)
    bs = guarded_tensordot(b_arr, s_arr, [1], [0])
    # p: (k, b1, b2, c2, d1, d2) for the first term; the same array reads
    # as (f2, e1, e2, l, g1, g2) for the trailing factor pair, and as
    # (c2, b1, b2, d1, k, d2) for the second term's leading pair.
    p = guarded_tensordot(s_arr, bs, [0], [0])
    p2 = guarded_tensordot(p, b_arr, [0], [0])  # (b1, b2, c2, d1, d2, l)
    x_yin = guarded_tensordot(p2, p, [5], [3])
    # (b1, b2, c2, d1, d2, f2, e1, e2, g1, g2)
    p2y = guarded_tensordot(p, b_arr, [4], [0])  # (c2, b1, b2, d1, d2, l)
    x_yang = guarded_tensordot(p2y, p, [5], [3])
    # (c2, b1, b2, d1, d2, f2, e1, e2, g1, g2)
    x_yang = x_yang.transpose(1, 2, 0, 3, 4, 5, 6, 7, 8, 9)
    arr = guarded_add(x_yin, x_yang)
    return arr, b_scale**3 * s_scale**4


# ---------------------------------------------------------------------------
# Public residuals.
# ---------------------------------------------------------------------------


def _condition1_data(
    K: KillingInput,
    gbar: GbarLike,
    form: ConditionForm1,
) -> tuple[np.ndarray, Fraction, _Groups]:
    form = ConditionForm1.parse(form)
    if form is ConditionForm1.MAIN1:
        R = _as_r(K)
        g = _resolve_gbar(gbar, R.dim)
        arr, scale = _quadratic_r_array(R, g)
        arr, scale = _run_ops(arr, scale, _MAIN1_OPS)
        return arr, scale, _MAIN1_GROUPS
    if form is ConditionForm1.OMEGA:
        R = _as_r(K)
        g = _resolve_gbar(gbar, R.dim)
        arr, scale = _omega_array(R, g)
        arr, scale = _run_ops(arr, scale, _OMEGA_OPS)
        return arr, scale, _OMEGA_GROUPS
    S = _as_s(K)
    g = _resolve_gbar(gbar, S.dim)
    arr, scale = _quadratic_s_array(S, g)
    arr, scale = _run_ops(arr, scale, _COND1_S_OPS[form])
    return arr, scale, _COND1_S_GROUPS[form]


def condition1_residual(
    K: KillingInput,
    gbar: GbarLike,
    form: "ConditionForm1 | str" = ConditionForm1.MAIN1,
) -> Tensor:
    """Exact residual of the first integrability condition.

    ``K`` may be given in either curvature class; ``gbar`` is a model
    space or the order-2 contraction tensor itself.  The returned tensor
    is zero exactly when the condition holds in the requested ``form``.

    Raises :class:`UnsupportedForm` if ``form`` is ``OMEGA`` and
    ``gbar`` is degenerate (flat model).
    """
    arr, scale, _ = _condition1_data(K, gbar, ConditionForm1.parse(form))
    dim = arr.shape[0] if arr.ndim else 0
    return to_tensor(arr, scale, dim)


def _condition2_data(
    K: KillingInput,
    gbar: GbarLike,
    form: ConditionForm2,
) -> tuple[np.ndarray, Fraction, _Groups]:
    form = ConditionForm2.parse(form)
    if form is ConditionForm2.MAIN2:
        R = _as_r(K)
        g = _resolve_gbar(gbar, R.dim)
        arr, scale = _cubic_r_array(R, g)
        arr, scale = _run_ops(arr, scale, _MAIN2_OPS)
        return arr, scale, _MAIN2_GROUPS
    S = _as_s(K)
    g = _resolve_gbar(gbar, S.dim)
    arr, scale = _cubic_s_array(S, g)
    if form is ConditionForm2.KS2_HOOK_YIN:
        arr, scale = _run_ops(arr, scale, _KS2_HOOK_YIN_OPS)
        return arr, scale, _KS2_HOOK_YIN_GROUPS
    arr, scale = _run_ops(arr, scale, _KS2_44_BOTH_OPS)
    return arr, scale, _KS2_44_BOTH_GROUPS


def condition2_residual(
    K: KillingInput,
    gbar: GbarLike,
    form: "ConditionForm2 | str" = ConditionForm2.MAIN2,
) -> Tensor:
    """Exact residual of the second integrability condition.

    The different forms are guaranteed to share their kernel only on
    inputs that already satisfy the first condition; :func:`check`
    attaches a warning to its report in the contrary case.
    """
    arr, scale, _ = _condition2_data(K, gbar, ConditionForm2.parse(form))
    dim = arr.shape[0] if arr.ndim else 0
    return to_tensor(arr, scale, dim)


def _kr2_residual_data(
    K: KillingInput, gbar: GbarLike
) -> tuple[np.ndarray, Fraction, _Groups]:
    """Cubic R-operand variant of the second condition (cross-check only).

    ``gbar^{mn} gbar^{pq} R_{m d1 c2 d2} R_{n e1 p e2} R_{q b1 f2 b2}``
    under the disjoint symmetriser/antisymmetriser pair.
    """
    R = _as_r(K)
    g = _resolve_gbar(gbar, R.dim)
    b_arr, b_scale = to_int_array(g)
    r_arr, r_scale = to_int_array(R.tensor)
    br = guarded_tensordot(b_arr, r_arr, [1], [0])  # (m, e1, p, e2) / (p, b1, f2, b2)
    x = guarded_tensordot(r_arr, br, [0], [0])  # (d1, c2, d2, e1, p, e2)
    x, x_scale = normalize_array(x, b_scale * r_scale**2)
    u = guarded_tensordot(x, br, [4], [0])  # (d1, c2, d2, e1, e2, b1, f2, b2)
    arr, scale = _run_ops(u, x_scale * b_scale * r_scale, _KR2_OPS)
    return arr, scale, _KR2_GROUPS


def _kr2_residual(K: KillingInput, gbar: GbarLike) -> Tensor:
    arr, scale, _ = _kr2_residual_data(K, gbar)
    dim = arr.shape[0] if arr.ndim else 0
    return to_tensor(arr, scale, dim)


def _condition3_data(
    K: KillingInput, gbar: GbarLike
) -> tuple[np.ndarray, Fraction, _Groups]:
    S = _as_s(K)
    g = _resolve_gbar(gbar, S.dim)
    arr, scale = _quartic_s_array(S, g)
    arr, scale = _run_ops(arr, scale, _COND3_OPS)
    return arr, scale, _COND3_GROUPS


def condition3_residual(K: KillingInput, gbar: GbarLike) -> Tensor:
    """Exact residual of the quartic third condition.

    The residual has ten free slots: a seven-slot symmetriser and a
    disjoint three-slot antisymmetriser act on a two-term contraction of
    four copies of the symmetric-class tensor.  It vanishes on every
    input satisfying the first two conditions.
    """
    arr, scale, _ = _condition3_data(K, gbar)
    dim = arr.shape[0] if arr.ndim else 0
    return to_tensor(arr, scale, dim)


# ---------------------------------------------------------------------------
# Unconditional identity suite.
# ---------------------------------------------------------------------------

_IDENTITY_CHECKS = (
    "symmetrised_bianchi",
    "hook_4_1_1_on_quadratic",
    "hook_6_1_1_on_cubic_yin",
    "hook_6_1_1_on_cubic_yang",
    "hook_8_1_1_on_quartic_yin",
    "hook_8_1_1_on_quartic_yang",
    "projector_decomposition",
)

_PROJECTOR_SUM: GroupAlgebraElement | None = None


def _projector_sum() -> GroupAlgebraElement:
    """The two-projector resolution of (antisymmetriser x symmetriser).

    With labels 1..6 on slots (a2, b1, b2, c2, d1, d2):
    ``288 * Anti(c2,d2,a2) Sym(b2,b1,d1) = t1 t1* + t2* t2`` where
    ``t1`` is the Young symmetriser of the hook tableau with row
    (b2, b1, d1) and column (b2, c2, d2, a2), and ``t2`` the one with
    row (c2, b2, b1, d1) and column (c2, d2, a2).
    """
    global _PROJECTOR_SUM
    if _PROJECTOR_SUM is None:
        t1 = young_symmetriser([[3, 2, 5], [4], [6], [1]])
        t2 = young_symmetriser([[4, 3, 2, 5], [6], [1]])
        _PROJECTOR_SUM = t1.multiply(t1.adjoint()) + t2.adjoint().multiply(t2)
    return _PROJECTOR_SUM


def _permute_int(arr: np.ndarray, perm: Permutation) -> np.ndarray:
    """Slot action of a permutation on an integer array.

    Matches ``permute_slots``: the content of slot ``k`` moves to slot
    ``perm(k)``, i.e. ``result[I] = arr[I o perm]``.
    """
    axes = [0] * arr.ndim
    for position, image in enumerate(perm.images):
        axes[image - 1] = position
    return arr.transpose(axes)


def _apply_int(element: GroupAlgebraElement, arr: np.ndarray) -> np.ndarray:
    out = np.zeros(arr.shape, dtype=arr.dtype)
    for perm, coeff in element.terms.items():
        if coeff.denominator != 1:
            raise InvalidArgument("integer-array application needs integer coefficients")
        out = guarded_add(out, int(coeff) * _permute_int(arr, perm))
    return out


def _multi_outer(vectors: Sequence[np.ndarray]) -> np.ndarray:
    out = vectors[0]
    for vec in vectors[1:]:
        out = np.multiply.outer(out, vec)
    return out


def verify_identity_suite(
    S: "SymCurvatureTensor | Tensor",
    gbar: GbarLike,
    *,
    rng=0,
) -> tuple[str, ...]:
    """Check operator identities that hold for every valid ``S``.

    Runs, in order: the symmetrised cyclic-sum identity; the vanishing
    of the overlapping hook operators on the quadratic, cubic (both
    variants) and quartic (both terms) contractions; and the projector
    decomposition of (antisymmetriser x symmetriser) evaluated on
    ``u (x) x (x) x (x) v (x) x (x) w`` tensors antisymmetrised in the
    (u, v, w) slots, with random integer vectors drawn from ``rng``.

    Returns the tuple of passed check names.  Raises
    :class:`IdentityViolation` naming the first failing check — such a
    failure indicates an implementation bug, not bad input data.
    Invalid ``S`` (symmetry or cyclic-sum violations) raises
    :class:`InvalidArgument` before any identity runs.
    """
    tensor = S.tensor if isinstance(S, SymCurvatureTensor) else S
    if not isinstance(tensor, Tensor) or tensor.order != 4:
        raise InvalidArgument("identity suite requires an order-4 tensor")
    S = SymCurvatureTensor(tensor)  # precondition gate, re-validates
    g = _resolve_gbar(gbar, S.dim)
    random = coerce_rng(rng)

    def require(name: str, ok: bool) -> None:
        if not ok:
            raise IdentityViolation(f"identity check failed: {name}")

    s_arr, _ = to_int_array(S.tensor)

    # Symmetrising the cyclic-sum identity in the last two slots:
    # Sym_{23}(S_{i a2 b1 b2} + 2 S_{i b1 b2 a2}) = 0.
    bianchi = (
        s_arr
        + s_arr.transpose(0, 1, 3, 2)
        + 2 * (s_arr.transpose(0, 3, 1, 2) + s_arr.transpose(0, 3, 2, 1))
    )
    require("symmetrised_bianchi", is_zero_array(bianchi))

    # Hook operator with shared slot annihilates the quadratic operand:
    # Anti(c2,d2,a2) then Sym(c2,b2,b1,d1) on (a2,b1,b2,c2,d1,d2).
    quad, quad_scale = _quadratic_s_array(S, g)
    arr, _ = _run_ops(quad, quad_scale, ((-1, (3, 5, 0)), (1, (3, 2, 1, 4))))
    require("hook_4_1_1_on_quadratic", is_zero_array(arr))

    # Cubic operands for the order-8 hook identities.
    b_arr, _ = to_int_array(g)
    bs = guarded_tensordot(b_arr, s_arr, [1], [0])
    p = guarded_tensordot(s_arr, bs, [0], [0])
    # First variant: (b1, b2, c2, d1, d2, f2, e1, e2).
    y_yin = guarded_tensordot(p, bs, [0], [0])
    arr, _ = _run_ops(y_yin, Fraction(1), ((-1, (2, 4, 5)), (1, (2, 1, 0, 3, 6, 7))))
    require("hook_6_1_1_on_cubic_yin", is_zero_array(arr))
    # Second variant: (c2, b1, b2, d1, d2, f2, e1, e2).
    y_yang = guarded_tensordot(p, bs, [4], [0])
    arr, _ = _run_ops(y_yang, Fraction(1), ((-1, (0, 4, 5)), (1, (0, 2, 1, 3, 6, 7))))
    require("hook_6_1_1_on_cubic_yang", is_zero_array(arr))

    # Quartic operands, each term separately, aligned to
    # (b1, b2, c2, d1, d2, f2, e1, e2, g1, g2).
    p2 = guarded_tensordot(p, b_arr, [0], [0])
    x_yin = guarded_tensordot(p2, p, [5], [3])
    arr, _ = _run_ops(
        x_yin, Fraction(1), ((-1, (2, 4, 5)), (1, (2, 1, 0, 3, 6, 7, 8, 9)))
    )
    require("hook_8_1_1_on_quartic_yin", is_zero_array(arr))
    p2y = guarded_tensordot(p, b_arr, [4], [0])
    x_yang = guarded_tensordot(p2y, p, [5], [3]).transpose(
        1, 2, 0, 3, 4, 5, 6, 7, 8, 9
    )
    arr, _ = _run_ops(
        x_yang, Fraction(1), ((-1, (2, 4, 5)), (1, (2, 1, 0, 3, 6, 7, 8, 9)))
    )
    require("hook_8_1_1_on_quartic_yang", is_zero_array(arr))

    # Projector decomposition on u (x) x (x) x (x) v (x) x (x) w with the
    # (u, v, w) slots antisymmetrised; slots are (a2, b1, b2, c2, d1, d2).
    dim = S.dim
    vecs = {
        name: np.array([random.randint(-9, 9) for _ in range(dim)], dtype=np.int64)
        for name in ("x", "u", "v", "w")
    }
    outer = _multi_outer(
        [vecs["u"], vecs["x"], vecs["x"], vecs["v"], vecs["x"], vecs["w"]]
    )
    t = staged_symmetrise(outer, (0, 3, 5), sign=-1)
    lhs = 288 * staged_symmetrise(staged_symmetrise(t, (1, 2, 4)), (0, 3, 5), sign=-1)
    rhs = _apply_int(_projector_sum(), t)
    require("projector_decomposition", is_zero_array(lhs - rhs))

    return _IDENTITY_CHECKS


# ---------------------------------------------------------------------------
# Verdict report.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntegrabilityReport:
    """Exact verdicts and residual supports for one input tensor."""

    model_kind: str
    signature: "tuple[int, int] | None"
    dim: int
    cond1_zero: bool
    cond2_zero: bool
    cond1_support: int
    cond2_support: int
    forms_used: tuple[str, str]
    warnings: tuple[str, ...]
    elapsed_seconds: float

    @property
    def integrable(self) -> bool:
        return self.cond1_zero and self.cond2_zero

    @property
    def residual_supports(self) -> dict[str, int]:
        """Nonzero canonical components per condition."""
        return {"condition1": self.cond1_support, "condition2": self.cond2_support}


def check(
    K: KillingInput,
    model: GbarLike,
    form1: "ConditionForm1 | str" = ConditionForm1.MAIN1,
    form2: "ConditionForm2 | str" = ConditionForm2.MAIN2,
) -> IntegrabilityReport:
    """Decide integrability of the Killing tensor encoded by ``K``.

    Evaluates the first- and second-condition residuals in the requested
    forms against the model's contraction tensor.  The verdict
    ``report.integrable`` is exact.  When the first condition fails, a
    warning records that the second-condition forms are then not
    guaranteed to agree with each other.
    """
    form1 = ConditionForm1.parse(form1)
    form2 = ConditionForm2.parse(form2)
    start = time.perf_counter()
    arr1, _, groups1 = _condition1_data(K, model, form1)
    arr2, _, groups2 = _condition2_data(K, model, form2)
    elapsed = time.perf_counter() - start

    dim = K.dim
    cond1_zero = is_zero_array(arr1)
    cond2_zero = is_zero_array(arr2)
    cond1_support = (
        0 if cond1_zero else canonical_nonzero_count(arr1, dim, groups1[0], groups1[1])
    )
    cond2_support = (
        0 if cond2_zero else canonical_nonzero_count(arr2, dim, groups2[0], groups2[1])
    )
    warnings: tuple[str, ...] = ()
    if not cond1_zero:
        warnings = (
            "first condition residual is nonzero; the second-condition "
            "forms are only guaranteed equivalent when the first "
            "condition holds",
        )

    if isinstance(model, ModelSpace):
        model_kind = model.kind.value
        signature = (model.signature.p, model.signature.q)
    else:
        model_kind = "custom"
        signature = None

    return IntegrabilityReport(
        model_kind=model_kind,
        signature=signature,
        dim=dim,
        cond1_zero=cond1_zero,
        cond2_zero=cond2_zero,
        cond1_support=cond1_support,
        cond2_support=cond2_support,
        forms_used=(form1.value, form2.value),
        warnings=warnings,
        elapsed_seconds=elapsed,
    )
