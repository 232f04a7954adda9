"""Symmetric-group machinery: permutations, group algebra, Young calculus.

This module implements the representation-theoretic toolkit used to build
and manipulate index-symmetry operators:

* :class:`Permutation` — permutations of ``{1, …, d}`` with the left
  composition convention ``(a ∘ b)(k) = a(b(k))``;
* :class:`GroupAlgebraElement` — finite rational linear combinations of
  permutations, with convolution product, adjoint, and an action on
  tensor slots;
* :class:`YoungFrame` / :class:`YoungTableau` — integer partitions and
  bijective fillings, hook lengths, and irreducible dimensions for both
  the symmetric and general linear groups;
* :func:`young_symmetriser` — the unnormalised row-symmetrise /
  column-antisymmetrise projector attached to a tableau;
* :func:`lr_decompose` — Littlewood–Richardson multiplicities, computed
  by enumerating lattice-word skew fillings box by box.

Whenever an element acts on a tensor, the **rightmost** factor of a
product acts first: ``a.multiply(b).apply(T) == a.apply(b.apply(T))``.
"""

from __future__ import annotations

import ast
import itertools
from collections import Counter
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import InvalidArgument
from .tensor import Tensor, as_scalar, permute_slots

__all__ = [
    "Permutation",
    "GroupAlgebraElement",
    "YoungFrame",
    "YoungTableau",
    "young_symmetriser",
    "partitions",
    "lr_decompose",
]


class Permutation:
    """A permutation of ``{1, …, d}`` stored by its image tuple.

    ``images[k-1]`` is the image of ``k``.  Composition is function
    composition, ``(a ∘ b)(k) = a(b(k))``, so in a product the right
    factor is applied first — matching how products of group-algebra
    elements act on tensors.
    """

    __slots__ = ("_images",)

    def __init__(self, images: Sequence[int]) -> None:
        imgs = tuple(int(v) for v in images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise InvalidArgument(f"images {imgs} are not a rearrangement of 1..{len(imgs)}")
        self._images = imgs

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build from disjoint cycles; ``(a, b, c)`` maps a→b, b→c, c→a."""
        images = list(range(1, degree + 1))
        touched: set[int] = set()
        for cycle in cycles:
            cyc = [int(v) for v in cycle]
            if any(v < 1 or v > degree for v in cyc):
                raise InvalidArgument(f"cycle {cyc} exceeds degree {degree}")
            if touched.intersection(cyc) or len(set(cyc)) != len(cyc):
                raise InvalidArgument(f"cycles are not disjoint at {cyc}")
            touched.update(cyc)
            for i, v in enumerate(cyc):
                images[v - 1] = cyc[(i + 1) % len(cyc)]
        return cls(images)

    @property
    def images(self) -> tuple[int, ...]:
        return self._images

    @property
    def degree(self) -> int:
        return len(self._images)

    def __call__(self, k: int) -> int:
        if not 1 <= k <= self.degree:
            raise InvalidArgument(f"{k} outside 1..{self.degree}")
        return self._images[k - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """Function composition ``self ∘ other`` (``other`` applied first)."""
        if self.degree != other.degree:
            raise InvalidArgument("cannot compose permutations of different degrees")
        return Permutation(tuple(self._images[v - 1] for v in other._images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for k, v in enumerate(self._images, start=1):
            inv[v - 1] = k
        return Permutation(inv)

    def sign(self) -> int:
        """Parity: ``+1`` for even permutations, ``−1`` for odd."""
        sign = 1
        seen = [False] * self.degree
        for start in range(self.degree):
            if seen[start]:
                continue
            length = 0
            node = start
            while not seen[node]:
                seen[node] = True
                node = self._images[node] - 1
                length += 1
            if length % 2 == 0:
                sign = -sign
        return sign

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self._images, start=1))

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Disjoint cycles, fixed points omitted, each led by its smallest element."""
        seen: set[int] = set()
        result: list[tuple[int, ...]] = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            node = self(start)
            while node != start:
                cycle.append(node)
                seen.add(node)
                node = self(node)
            if len(cycle) > 1:
                result.append(tuple(cycle))
        return tuple(result)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def __repr__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return f"Permutation.identity({self.degree})"
        text = "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)
        return f"Permutation[{text}]"


class GroupAlgebraElement:
    """A finite rational linear combination of permutations of fixed degree.

    The ``terms`` mapping sends permutations to non-zero
    :class:`~fractions.Fraction` coefficients.  The product is the group
    convolution; under :meth:`apply`, the right factor of a product acts
    on the tensor first.
    """

    __slots__ = ("_degree", "_terms")

    def __init__(self, degree: int, terms: Mapping[Permutation, object] | None = None) -> None:
        if degree < 1:
            raise InvalidArgument(f"degree must be positive, got {degree}")
        self._degree = int(degree)
        clean: dict[Permutation, Fraction] = {}
        for perm, coeff in (terms or {}).items():
            if perm.degree != self._degree:
                raise InvalidArgument(
                    f"term degree {perm.degree} does not match element degree {self._degree}"
                )
            value = as_scalar(coeff)  # type: ignore[arg-type]
            if value != 0:
                clean[perm] = value
        self._terms = clean

    # -- constructors --------------------------------------------------

    @classmethod
    def unit(cls, degree: int) -> "GroupAlgebraElement":
        """The identity permutation with coefficient one."""
        return cls(degree, {Permutation.identity(degree): Fraction(1)})

    @classmethod
    def from_permutation(cls, perm: Permutation, coeff: object = 1) -> "GroupAlgebraElement":
        return cls(perm.degree, {perm: coeff})

    @classmethod
    def symmetriser_over(cls, labels: Iterable[int], degree: int) -> "GroupAlgebraElement":
        """Unnormalised sum of all permutations of ``labels`` (others fixed)."""
        return cls._over(labels, degree, signed=False)

    @classmethod
    def antisymmetriser_over(cls, labels: Iterable[int], degree: int) -> "GroupAlgebraElement":
        """Unnormalised signed sum of all permutations of ``labels``."""
        return cls._over(labels, degree, signed=True)

    @classmethod
    def _over(cls, labels: Iterable[int], degree: int, *, signed: bool) -> "GroupAlgebraElement":
        subset = tuple(int(v) for v in labels)
        if len(set(subset)) != len(subset):
            raise InvalidArgument(f"label group {subset} contains repeats")
        if any(v < 1 or v > degree for v in subset):
            raise InvalidArgument(f"label group {subset} exceeds degree {degree}")
        terms: dict[Permutation, Fraction] = {}
        for arrangement in itertools.permutations(subset):
            images = list(range(1, degree + 1))
            for src, dst in zip(subset, arrangement):
                images[src - 1] = dst
            perm = Permutation(images)
            terms[perm] = Fraction(perm.sign() if signed else 1)
        return cls(degree, terms)

    # -- accessors -----------------------------------------------------

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def terms(self) -> dict[Permutation, Fraction]:
        """Copy of the coefficient mapping (non-zero terms only)."""
        return dict(self._terms)

    def coefficient(self, perm: Permutation) -> Fraction:
        return self._terms.get(perm, Fraction(0))

    def term_count(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    # -- linear structure ----------------------------------------------

    def _check_degree(self, other: "GroupAlgebraElement") -> None:
        if self._degree != other._degree:
            raise InvalidArgument(
                f"degree mismatch: {self._degree} vs {other._degree}"
            )

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        self._check_degree(other)
        merged = dict(self._terms)
        for perm, coeff in other._terms.items():
            merged[perm] = merged.get(perm, Fraction(0)) + coeff
        return GroupAlgebraElement(self._degree, merged)

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self._degree, {p: -c for p, c in self._terms.items()})

    def __mul__(self, scalar: object) -> "GroupAlgebraElement":
        if isinstance(scalar, GroupAlgebraElement):
            return NotImplemented
        value = as_scalar(scalar)  # type: ignore[arg-type]
        return GroupAlgebraElement(self._degree, {p: c * value for p, c in self._terms.items()})

    __rmul__ = __mul__

    def multiply(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        """Convolution product; in ``a.multiply(b)``, ``b`` acts first under apply."""
        self._check_degree(other)
        product: dict[Permutation, Fraction] = {}
        for p, cp in self._terms.items():
            for q, cq in other._terms.items():
                key = p.compose(q)
                product[key] = product.get(key, Fraction(0)) + cp * cq
        return GroupAlgebraElement(self._degree, product)

    def adjoint(self) -> "GroupAlgebraElement":
        """Replace every permutation by its inverse, keeping coefficients."""
        return GroupAlgebraElement(
            self._degree, {p.inverse(): c for p, c in self._terms.items()}
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self._degree == other._degree and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"GroupAlgebraElement(degree={self._degree}, terms={len(self._terms)})"

    # -- tensor action -------------------------------------------------

    def apply(
        self,
        tensor: Tensor,
        slot_of_label: Mapping[int, int] | None = None,
    ) -> Tensor:
        """Act on ``tensor`` by permuting slots.

        ``slot_of_label`` assigns each label ``1..degree`` a distinct
        1-based tensor slot; labels default to the first ``degree`` slots.
        A permutation term π moves the content of slot ``m(l)`` around via
        the slot permutation σ with ``σ(m(l)) = m(π(l))``; unassigned
        slots are untouched.  The result is the coefficient-weighted sum
        over all terms, so products act right factor first.
        """
        mapping = dict(slot_of_label) if slot_of_label is not None else {
            l: l for l in range(1, self._degree + 1)
        }
        if sorted(mapping.keys()) != list(range(1, self._degree + 1)):
            raise InvalidArgument(
                f"slot_of_label must assign every label 1..{self._degree}"
            )
        slots = list(mapping.values())
        if len(set(slots)) != len(slots):
            raise InvalidArgument(f"slot_of_label values {slots} are not distinct")
        if any(s < 1 or s > tensor.order for s in slots):
            raise InvalidArgument(
                f"slot_of_label values {slots} exceed tensor order {tensor.order}"
            )
        total: Tensor | None = None
        for perm, coeff in self._terms.items():
            images = list(range(1, tensor.order + 1))
            for label in range(1, self._degree + 1):
                images[mapping[label] - 1] = mapping[perm(label)]
            term = permute_slots(tensor, images)
            if coeff != 1:
                term = term * coeff
            total = term if total is None else total + term
        if total is None:
            return Tensor.zeros(tensor.dim, tensor.order)
        return total


class YoungFrame:
    """An integer partition drawn as left-justified rows of boxes."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[int]) -> None:
        parts = tuple(int(v) for v in rows)
        if not parts or any(v < 1 for v in parts):
            raise InvalidArgument(f"partition parts must be positive, got {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidArgument(f"partition rows must be weakly decreasing, got {parts}")
        self._rows = parts

    @classmethod
    def from_text(cls, text: str) -> "YoungFrame":
        """Parse ``"(4,2,1)"``, ``"(3,)"``, or ``"[2, 2]"``."""
        try:
            value = ast.literal_eval(text.strip())
        except (ValueError, SyntaxError) as exc:
            raise InvalidArgument(f"cannot parse partition {text!r}") from exc
        if isinstance(value, int):
            value = (value,)
        if not isinstance(value, (tuple, list)):
            raise InvalidArgument(f"cannot parse partition {text!r}")
        return cls(value)

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def size(self) -> int:
        """Total number of boxes."""
        return sum(self._rows)

    def row_count(self) -> int:
        return len(self._rows)

    def column_lengths(self) -> tuple[int, ...]:
        return tuple(
            sum(1 for r in self._rows if r > c) for c in range(self._rows[0])
        )

    def conjugate(self) -> "YoungFrame":
        """Transpose: rows become columns."""
        return YoungFrame(self.column_lengths())

    def cells(self) -> tuple[tuple[int, int], ...]:
        """All (row, col) cells, 0-based, row-major."""
        return tuple(
            (r, c) for r, length in enumerate(self._rows) for c in range(length)
        )

    def hook_length(self, row: int, col: int) -> int:
        """Arm + leg + 1 for the 0-based cell (row, col)."""
        if not (0 <= row < len(self._rows) and 0 <= col < self._rows[row]):
            raise InvalidArgument(f"cell ({row},{col}) outside frame {self._rows}")
        arm = self._rows[row] - col - 1
        leg = sum(1 for r in range(row + 1, len(self._rows)) if self._rows[r] > col)
        return arm + leg + 1

    def hook_product(self) -> int:
        """Product of all hook lengths."""
        result = 1
        for row, col in self.cells():
            result *= self.hook_length(row, col)
        return result

    def sym_irrep_dim(self) -> int:
        """Dimension of the symmetric-group irreducible: n! / hook product."""
        factorial = 1
        for k in range(2, self.size + 1):
            factorial *= k
        dim, rem = divmod(factorial, self.hook_product())
        assert rem == 0
        return dim

    def gl_irrep_dim(self, space_dim: int) -> int:
        """Dimension of the GL(space_dim) irreducible with this shape.

        Product over cells of ``(space_dim + col − row)`` divided by the
        hook product; zero when the frame has more rows than ``space_dim``.
        """
        if space_dim < 1:
            raise InvalidArgument(f"space dimension must be positive, got {space_dim}")
        numerator = 1
        for row, col in self.cells():
            numerator *= space_dim + col - row
        dim, rem = divmod(numerator, self.hook_product())
        assert rem == 0
        return dim

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, YoungFrame):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"YoungFrame({self._rows})"


class YoungTableau:
    """A Young frame bijectively filled with the labels ``1..n``."""

    __slots__ = ("_frame", "_filling")

    def __init__(self, filling: Iterable[Iterable[int]]) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in filling)
        frame = YoungFrame(tuple(len(row) for row in rows))
        labels = [v for row in rows for v in row]
        if sorted(labels) != list(range(1, frame.size + 1)):
            raise InvalidArgument(
                f"tableau labels must be exactly 1..{frame.size}, got {sorted(labels)}"
            )
        self._frame = frame
        self._filling = rows

    @classmethod
    def from_text(cls, text: str) -> "YoungTableau":
        """Parse ``"[[1,2],[3]]"`` row-list notation."""
        try:
            value = ast.literal_eval(text.strip())
        except (ValueError, SyntaxError) as exc:
            raise InvalidArgument(f"cannot parse tableau {text!r}") from exc
        if not isinstance(value, (list, tuple)):
            raise InvalidArgument(f"cannot parse tableau {text!r}")
        return cls(value)

    @classmethod
    def standard(cls, frame: YoungFrame) -> "YoungTableau":
        """Row-reading filling: labels 1..n left-to-right, top-to-bottom."""
        filling = []
        next_label = 1
        for length in frame.rows:
            filling.append(list(range(next_label, next_label + length)))
            next_label += length
        return cls(filling)

    @property
    def frame(self) -> YoungFrame:
        return self._frame

    @property
    def size(self) -> int:
        return self._frame.size

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._filling

    @property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        cols = []
        for c in range(self._frame.rows[0]):
            cols.append(tuple(row[c] for row in self._filling if len(row) > c))
        return tuple(cols)

    def conjugate(self) -> "YoungTableau":
        """Transposed tableau: the filling of the conjugate frame."""
        return YoungTableau(self.columns)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, YoungTableau):
            return NotImplemented
        return self._filling == other._filling

    def __hash__(self) -> int:
        return hash(self._filling)

    def __repr__(self) -> str:
        return f"YoungTableau({[list(r) for r in self._filling]})"


def young_symmetriser(tableau: YoungTableau | Iterable[Iterable[int]]) -> GroupAlgebraElement:
    """Unnormalised Young symmetriser of a bijective tableau.

    The element is the product of all row symmetrisers times all column
    antisymmetrisers.  Under :meth:`GroupAlgebraElement.apply`, the
    column antisymmetrisers therefore act on the tensor first.  Squaring
    reproduces the element scaled by the frame's hook product.
    """
    tab = tableau if isinstance(tableau, YoungTableau) else YoungTableau(tableau)
    degree = tab.size
    element = GroupAlgebraElement.unit(degree)
    for row in tab.rows:
        if len(row) > 1:
            element = element.multiply(GroupAlgebraElement.symmetriser_over(row, degree))
    for col in tab.columns:
        if len(col) > 1:
            element = element.multiply(GroupAlgebraElement.antisymmetriser_over(col, degree))
    return element


def partitions(n: int) -> list[YoungFrame]:
    """All partitions of ``n`` in descending lexicographic order."""
    if n < 1:
        raise InvalidArgument(f"partitions requires a positive integer, got {n}")

    def generate(remaining: int, cap: int) -> Iterable[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in generate(remaining - first, first):
                yield (first,) + rest

    return [YoungFrame(p) for p in generate(n, n)]


# -- Littlewood–Richardson --------------------------------------------


def _lattice_word_ok(word: Sequence[int]) -> bool:
    counts: Counter[int] = Counter()
    for label in word:
        counts[label] += 1
        if label > 1 and counts[label] > counts[label - 1]:
            return False
    return True


def lr_decompose(frame1: YoungFrame, frame2: YoungFrame) -> dict[YoungFrame, int]:
    """Littlewood–Richardson multiplicities of the product of two shapes.

    Boxes of ``frame2`` are labelled by their row number and appended to
    ``frame1`` one at a time in increasing label order, keeping the shape
    a frame and never stacking equal labels in a column.  Completed
    fillings whose reverse reading word (rows top to bottom, each read
    right to left) is a lattice word are counted; the returned mapping
    sends each resulting frame to its multiplicity.
    """
    base = frame1.rows
    # One state = the labels appended to each row (rows beyond frame1 allowed).
    State = tuple[tuple[int, ...], ...]
    states: set[State] = {tuple(() for _ in base)}

    def row_length(state: State, r: int) -> int:
        basis = base[r] if r < len(base) else 0
        return basis + len(state[r])

    def label_at(state: State, r: int, c: int) -> int | None:
        """Label in cell (r, c), or None for base cells / empty cells."""
        if r >= len(state):
            return None
        basis = base[r] if r < len(base) else 0
        if c < basis:
            return None
        offset = c - basis
        row = state[r]
        return row[offset] if offset < len(row) else None

    for label, count in enumerate(frame2.rows, start=1):
        for _ in range(count):
            next_states: set[State] = set()
            for state in states:
                rows_now = len(state)
                for r in range(rows_now + 1):
                    target = state + ((),) if r == rows_now else state
                    new_len = row_length(target, r) + 1
                    if r > 0 and row_length(target, r - 1) < new_len:
                        continue  # shape would stop being a frame
                    col = new_len - 1
                    if r > 0 and label_at(target, r - 1, col) == label:
                        continue  # equal labels stacked in a column
                    grown = tuple(
                        row + (label,) if i == r else row
                        for i, row in enumerate(target)
                    )
                    next_states.add(grown)
            states = next_states

    result: Counter[YoungFrame] = Counter()
    for state in states:
        word = [v for row in state for v in reversed(row)]
        if not _lattice_word_ok(word):
            continue
        shape = tuple(
            (base[r] if r < len(base) else 0) + len(state[r])
            for r in range(len(state))
        )
        shape = tuple(v for v in shape if v > 0)
        result[YoungFrame(shape)] += 1
    return dict(result)
