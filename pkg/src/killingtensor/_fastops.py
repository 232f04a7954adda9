"""Integer fast paths for the large multilinear contraction pipelines.

The integrability conditions contract three or four order-4 tensors and
then (anti)symmetrise over up to seven slots, producing intermediate
arrays with up to ``N^10`` entries.  Doing this directly on Fraction
object arrays is orders of magnitude too slow, so this module:

* rescales a rational tensor to an integer array plus an exact scale
  factor (the least common multiple of the denominators);
* keeps arrays in ``int64`` while provable bounds rule out overflow,
  promoting to arbitrary-precision Python integers (object dtype) the
  moment a bound fails — results are exact in either representation;
* performs (anti)symmetrisation over ``m`` slots in ``m−1`` staged
  passes of pairwise swaps (a left-transversal decomposition of the
  symmetric group), costing ``m(m−1)/2`` array additions instead of
  ``m!`` terms;
* divides out integer content between stages to keep magnitudes small;
* converts back to Fraction tensors with value interning, plus a cheap
  all-zero fast path.

Everything here is an internal implementation detail; results are
always exactly equal to the direct Fraction computation.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .tensor import Tensor

__all__ = [
    "to_int_array",
    "guarded_tensordot",
    "guarded_add",
    "staged_symmetrise",
    "content_reduce",
    "normalize_array",
    "to_tensor",
    "is_zero_array",
    "canonical_nonzero_count",
]

# Stay well under 2^63 so sums of a few terms cannot wrap.
_INT64_SAFE = 1 << 62


def _as_object_ints(arr: np.ndarray) -> np.ndarray:
    """Copy an integer array into object dtype with Python-int elements."""
    out = np.array(arr.ravel().tolist(), dtype=object)
    return out.reshape(arr.shape)


def _max_abs(arr: np.ndarray) -> int:
    if arr.size == 0:
        return 0
    if arr.dtype == object:
        return max((abs(int(v)) for v in arr.flat), default=0)
    return int(np.abs(arr).max())


def to_int_array(tensor: Tensor) -> tuple[np.ndarray, Fraction]:
    """Rescale a Fraction tensor to integers.

    Returns ``(arr, scale)`` with ``tensor == scale * arr`` exactly;
    ``scale = 1 / lcm(denominators)``.  The array is ``int64`` when all
    magnitudes are safely representable, otherwise object dtype.
    """
    flat = tensor.array.ravel().tolist()
    lcm = 1
    for value in flat:
        lcm = math.lcm(lcm, value.denominator)
    ints = [int(value.numerator * (lcm // value.denominator)) for value in flat]
    scale = Fraction(1, lcm)
    if ints and max(abs(v) for v in ints) < _INT64_SAFE:
        arr = np.array(ints, dtype=np.int64).reshape(tensor.array.shape)
    else:
        arr = np.array(ints, dtype=object).reshape(tensor.array.shape)
    return arr, scale


def guarded_tensordot(
    a: np.ndarray,
    b: np.ndarray,
    axes_a: Sequence[int],
    axes_b: Sequence[int],
) -> np.ndarray:
    """``np.tensordot`` with exact integer semantics.

    When both operands are ``int64``, checks the worst-case bound
    ``K · max|a| · max|b|`` (``K`` the contracted volume) and promotes
    to Python-int arrays if it could overflow.
    """
    if a.dtype != object and b.dtype != object:
        volume = 1
        for axis in axes_a:
            volume *= a.shape[axis]
        bound = volume * _max_abs(a) * _max_abs(b)
        if bound >= _INT64_SAFE:
            a = _as_object_ints(a)
            b = _as_object_ints(b)
    elif a.dtype != b.dtype:
        if a.dtype != object:
            a = _as_object_ints(a)
        else:
            b = _as_object_ints(b)
    return np.tensordot(a, b, axes=(list(axes_a), list(axes_b)))


def guarded_add(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact element-wise sum, promoting to object dtype before overflow."""
    if a.dtype != object and b.dtype != object:
        if _max_abs(a) + _max_abs(b) >= _INT64_SAFE:
            a = _as_object_ints(a)
            b = _as_object_ints(b)
    elif a.dtype != b.dtype:
        if a.dtype != object:
            a = _as_object_ints(a)
        else:
            b = _as_object_ints(b)
    return a + b


def staged_symmetrise(arr: np.ndarray, axes: Sequence[int], *, sign: int = 1) -> np.ndarray:
    """Unnormalised (anti)symmetrisation over ``axes`` in staged passes.

    ``sign=+1`` symmetrises, ``sign=−1`` antisymmetrises.  Pass ``k``
    multiplies on the left by ``(e ± sum of transpositions into the
    k-th axis)``, which telescopes to the full signed sum over all
    ``m!`` arrangements.  Integer arrays are promoted to object dtype
    whenever a pass could overflow ``int64``.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    positions = list(axes)
    current = arr
    for k in range(1, len(positions)):
        if current.dtype != object:
            if (k + 1) * _max_abs(current) >= _INT64_SAFE:
                current = _as_object_ints(current)
        total = current.copy()
        for i in range(k):
            swapped = current.swapaxes(positions[i], positions[k])
            if sign > 0:
                total = total + swapped
            else:
                total = total - swapped
        current = total
    return current


def content_reduce(arr: np.ndarray, scale: Fraction) -> tuple[np.ndarray, Fraction]:
    """Divide out the integer content of ``arr``, folding it into ``scale``."""
    if arr.dtype == object or arr.size == 0:
        return arr, scale
    gcd = int(np.gcd.reduce(np.abs(arr), axis=None))
    if gcd > 1:
        return arr // gcd, scale * gcd
    return arr, scale


def normalize_array(arr: np.ndarray, scale: Fraction) -> tuple[np.ndarray, Fraction]:
    """Content-reduce and, for object arrays, demote to ``int64`` if safe.

    Keeps intermediate magnitudes small between contraction and
    symmetrisation stages; the represented value ``scale * arr`` is
    unchanged.
    """
    if arr.size == 0:
        return arr, scale
    if arr.dtype != object:
        return content_reduce(arr, scale)
    gcd = 0
    for value in arr.flat:
        gcd = math.gcd(gcd, abs(int(value)))
        if gcd == 1:
            break
    if gcd == 0:
        return np.zeros(arr.shape, dtype=np.int64), scale
    if gcd > 1:
        arr = arr // gcd
        scale = scale * gcd
    if _max_abs(arr) < _INT64_SAFE:
        arr = arr.astype(np.int64)
    return arr, scale


def to_tensor(arr: np.ndarray, scale: Fraction, dim: int) -> Tensor:
    """Convert an integer array with scale back to an exact Fraction tensor."""
    if arr.dtype != object and not arr.any():
        return Tensor.zeros(dim, arr.ndim)
    cache: dict[int, Fraction] = {}
    values = []
    for raw in arr.ravel().tolist():
        key = int(raw)
        cached = cache.get(key)
        if cached is None:
            cached = scale * key
            cache[key] = cached
        values.append(cached)
    out = np.array(values, dtype=object).reshape(arr.shape)
    return Tensor(out, dim=dim)


def is_zero_array(arr: np.ndarray) -> bool:
    """Exact zero test for integer arrays of either dtype."""
    if arr.dtype != object:
        return not arr.any()
    return all(int(v) == 0 for v in arr.flat)


def canonical_nonzero_count(
    arr: np.ndarray,
    dim: int,
    sym_groups: Iterable[Sequence[int]] = (),
    anti_groups: Iterable[Sequence[int]] = (),
) -> int:
    """Count non-zero entries over canonical index tuples.

    A canonical tuple is weakly increasing along each symmetric slot
    group and strictly increasing along each antisymmetric slot group
    (0-based axes); remaining axes range freely.  Entries related by the
    declared symmetries are therefore counted once.
    """
    order = arr.ndim
    groups: list[tuple[tuple[int, ...], bool]] = []
    used: set[int] = set()
    for group in sym_groups:
        axes = tuple(int(a) for a in group)
        groups.append((axes, False))
        used.update(axes)
    for group in anti_groups:
        axes = tuple(int(a) for a in group)
        groups.append((axes, True))
        used.update(axes)
    free = [a for a in range(order) if a not in used]
    if len(used) + len(free) != order or any(a < 0 or a >= order for a in used):
        raise ValueError("slot groups must partition a subset of the axes")

    choices = []
    for axes, strict in groups:
        if strict:
            pool = list(itertools.combinations(range(dim), len(axes)))
        else:
            pool = list(itertools.combinations_with_replacement(range(dim), len(axes)))
        choices.append((axes, pool))

    count = 0
    free_pool = list(itertools.product(range(dim), repeat=len(free)))
    for group_pick in itertools.product(*(pool for _, pool in choices)):
        index_template: list[int] = [0] * order
        for (axes, _), values in zip(choices, group_pick):
            for axis, value in zip(axes, values):
                index_template[axis] = value
        for free_values in free_pool:
            for axis, value in zip(free, free_values):
                index_template[axis] = value
            if arr[tuple(index_template)] != 0:
                count += 1
    return count
