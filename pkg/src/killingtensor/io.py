"""File formats: tensor documents, model descriptors, report serialization.

Tensor document (JSON): ``{"dim": int, "order": int, "entries":
[{"idx": [0-based indices], "val": "p/q" | integer}], "form": "R" |
"S" (optional), "metadata": {...} (optional)}``; components not listed
are zero.  Model descriptor: ``{"N": int, "signature": [p, q], "kind":
"sphere" | "flat", "u": [rationals] (optional)}``; ``check``/``oracle``
reports serialize to plain dictionaries with verdicts, residual support
counts, forms used and timing.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Mapping, Union

import numpy as np

from .curvature import CurvatureTensor, SymCurvatureTensor
from .errors import InvalidArgument
from .integrability import IntegrabilityReport
from .models import ModelKind, ModelSpace
from .oracle import OracleReport
from .tensor import MetricSignature, Tensor

__all__ = [
    "parse_rational",
    "format_rational",
    "tensor_to_document",
    "document_to_tensor",
    "wrap_tensor",
    "save_tensor",
    "load_tensor",
    "parse_model_descriptor",
    "model_to_document",
    "report_to_document",
    "oracle_report_to_document",
]

FormTensor = Union[CurvatureTensor, SymCurvatureTensor, Tensor]


def parse_rational(value: object) -> Fraction:
    """Exact rational from an int, a string ``"p"`` or ``"p/q"``."""
    if isinstance(value, bool):
        raise InvalidArgument(f"expected a rational number, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidArgument(f"cannot parse rational {value!r}: {exc}") from exc
    raise InvalidArgument(
        f"expected a rational (int or 'p/q' string), got {type(value).__name__}"
    )


def format_rational(value: Fraction) -> "int | str":
    """Integers stay integers; other rationals become ``"p/q"`` strings."""
    value = Fraction(value)
    if value.denominator == 1:
        return int(value)
    return f"{value.numerator}/{value.denominator}"


def _form_name(tensor: FormTensor) -> "str | None":
    if isinstance(tensor, CurvatureTensor):
        return "R"
    if isinstance(tensor, SymCurvatureTensor):
        return "S"
    return None


def tensor_to_document(
    tensor: FormTensor,
    *,
    metadata: "Mapping[str, Any] | None" = None,
) -> dict:
    """Sparse JSON-ready document; zero components are omitted."""
    form = _form_name(tensor)
    plain = tensor.tensor if form is not None else tensor
    if not isinstance(plain, Tensor):
        raise InvalidArgument(
            "expected a Tensor, CurvatureTensor or SymCurvatureTensor, got "
            + type(tensor).__name__
        )
    entries = []
    for idx in np.ndindex(plain.array.shape):
        value = plain[idx]
        if value != 0:
            entries.append({"idx": [int(i) for i in idx], "val": format_rational(value)})
    doc: dict = {"dim": plain.dim, "order": plain.order, "entries": entries}
    if form is not None:
        doc["form"] = form
    if metadata:
        doc["metadata"] = dict(metadata)
    return doc


def document_to_tensor(doc: Mapping[str, Any]) -> tuple[Tensor, "str | None", dict]:
    """Parse a tensor document; returns (tensor, form, metadata).

    The symmetry class named by ``form`` is *not* enforced here — use
    :func:`wrap_tensor` for that.
    """
    if not isinstance(doc, Mapping):
        raise InvalidArgument("tensor document must be a mapping")
    try:
        dim = int(doc["dim"])
        order = int(doc["order"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidArgument(f"tensor document needs integer 'dim' and 'order': {exc}") from exc
    if dim < 1 or order < 0:
        raise InvalidArgument(f"invalid tensor shape: dim={dim}, order={order}")
    entries = doc.get("entries", [])
    if not isinstance(entries, list):
        raise InvalidArgument("'entries' must be a list of {idx, val} records")
    arr = np.empty((dim,) * order, dtype=object)
    arr.fill(Fraction(0))
    for record in entries:
        try:
            idx = tuple(int(i) for i in record["idx"])
            raw = record["val"]
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidArgument(f"malformed entry record {record!r}: {exc}") from exc
        if len(idx) != order:
            raise InvalidArgument(
                f"entry index {list(idx)} has length {len(idx)}, expected order {order}"
            )
        if any(i < 0 or i >= dim for i in idx):
            raise InvalidArgument(f"entry index {list(idx)} out of range for dim {dim}")
        arr[idx] = parse_rational(raw)
    form = doc.get("form")
    if form is not None and form not in ("R", "S"):
        raise InvalidArgument(f"unknown tensor form {form!r}; expected 'R' or 'S'")
    metadata = doc.get("metadata") or {}
    if not isinstance(metadata, dict):
        raise InvalidArgument("'metadata' must be a mapping")
    return Tensor(arr, dim=dim), form, metadata


def wrap_tensor(tensor: Tensor, form: "str | None") -> FormTensor:
    """Wrap a raw tensor in the symmetry class named by ``form``.

    Class invariants are validated on construction; violations surface
    as :class:`~killingtensor.errors.InvalidArgument` naming the failed
    symmetry.
    """
    if form == "R":
        return CurvatureTensor(tensor)
    if form == "S":
        return SymCurvatureTensor(tensor)
    if form is None:
        return tensor
    raise InvalidArgument(f"unknown tensor form {form!r}; expected 'R' or 'S'")


def save_tensor(
    path: "str | Path",
    tensor: FormTensor,
    *,
    metadata: "Mapping[str, Any] | None" = None,
) -> None:
    doc = tensor_to_document(tensor, metadata=metadata)
    Path(path).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")


def load_tensor(path: "str | Path") -> tuple[FormTensor, dict]:
    """Read a tensor document and wrap it in its declared symmetry class."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidArgument(f"cannot read tensor file {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidArgument(f"tensor file {path} is not valid JSON: {exc}") from exc
    tensor, form, metadata = document_to_tensor(doc)
    return wrap_tensor(tensor, form), metadata


def parse_model_descriptor(source: object) -> ModelSpace:
    """Model space from a descriptor mapping, JSON string, or file path.

    Accepted shapes: ``{"kind": "sphere"|"flat", "N": int}`` (Euclidean
    signature), optional ``"signature": [p, q]`` overriding ``N``, and
    optional ``"u"`` (flat models only).  The bare strings ``"sphere"``
    and ``"flat"`` are rejected here — resolve those shorthands with an
    explicit dimension before calling.
    """
    doc: Mapping[str, Any]
    if isinstance(source, ModelSpace):
        return source
    if isinstance(source, Mapping):
        doc = source
    elif isinstance(source, (str, Path)):
        text = str(source).strip()
        if text.startswith("{"):
            try:
                doc = json.loads(text)
            except json.JSONDecodeError as exc:
                raise InvalidArgument(f"model descriptor is not valid JSON: {exc}") from exc
        else:
            try:
                raw = Path(text).read_text(encoding="utf-8")
            except OSError as exc:
                raise InvalidArgument(f"cannot read model descriptor {text!r}: {exc}") from exc
            try:
                doc = json.loads(raw)
            except json.JSONDecodeError as exc:
                raise InvalidArgument(f"model file {text!r} is not valid JSON: {exc}") from exc
    else:
        raise InvalidArgument(
            "model descriptor must be a mapping, JSON string, or file path"
        )
    if "kind" not in doc:
        raise InvalidArgument("model descriptor needs a 'kind' of 'sphere' or 'flat'")
    kind = ModelKind.parse(str(doc["kind"]))
    if "signature" in doc:
        sig_raw = doc["signature"]
        if not isinstance(sig_raw, (list, tuple)) or len(sig_raw) != 2:
            raise InvalidArgument("'signature' must be a pair [p, q]")
        signature = MetricSignature(int(sig_raw[0]), int(sig_raw[1]))
        if "N" in doc and int(doc["N"]) != signature.dim:
            raise InvalidArgument(
                f"descriptor N={doc['N']} conflicts with signature {sig_raw}"
            )
    elif "N" in doc:
        signature = MetricSignature(int(doc["N"]), 0)
    else:
        raise InvalidArgument("model descriptor needs 'N' or 'signature'")
    height = None
    if doc.get("u") is not None:
        height = Tensor.from_nested([parse_rational(v) for v in doc["u"]])
    return ModelSpace(kind, signature, height_vector=height)


def model_to_document(model: ModelSpace) -> dict:
    doc: dict = {
        "kind": model.kind.value,
        "N": model.dim,
        "signature": [model.signature.p, model.signature.q],
    }
    if model.kind is ModelKind.FLAT and model.height_vector is not None:
        doc["u"] = [format_rational(model.height_vector[(i,)]) for i in range(model.dim)]
    return doc


def report_to_document(report: IntegrabilityReport) -> dict:
    return {
        "model": {"kind": report.model_kind, "signature": list(report.signature) if report.signature else None},
        "dim": report.dim,
        "integrable": report.integrable,
        "conditions": {
            "condition1": {"zero": report.cond1_zero, "support": report.cond1_support},
            "condition2": {"zero": report.cond2_zero, "support": report.cond2_support},
        },
        "forms_used": list(report.forms_used),
        "warnings": list(report.warnings),
        "elapsed_seconds": report.elapsed_seconds,
    }


def oracle_report_to_document(report: OracleReport) -> dict:
    return {
        "model": {"kind": report.model_kind, "signature": list(report.signature)},
        "dim": report.dim,
        "num_points": report.num_points,
        "seed": report.seed,
        "passes": report.passes,
        "conditions_pass": list(report.conditions_pass),
        "witness_point_indices": list(report.witnesses),
        "point_supports": [list(row) for row in report.point_supports],
        "points": [
            [format_rational(point.x[(i,)]) for i in range(report.dim)]
            for point in report.points
        ],
    }
