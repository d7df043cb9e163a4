"""Data models for multi-operation algebras, maps, forms and verification reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Iterable, Mapping

import numpy as np
import sympy

from errors import (
    ArityError,
    DimensionError,
    SingularError,
    UnknownKindError,
    UnknownOperationError,
)


# --- Scalars ---


def to_fraction(value: Any) -> Fraction:
    """Convert an exact value (int, Fraction, 'p/q' string, sympy Rational) to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("Booleans are not scalars")
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"Not an exact rational: {value!r}") from e
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, (float, np.floating)):
        raise TypeError(f"Floating point value {value!r} is not exact; use a 'p/q' string")
    raise TypeError(f"Cannot convert {type(value).__name__} to an exact rational")


_to_fraction_ufunc = np.frompyfunc(to_fraction, 1, 1)


def fraction_array(data: Any, shape: tuple[int, ...] | None = None) -> np.ndarray:
    """Build an object array of Fractions. Empty input is reshaped to `shape` when given."""
    arr = np.array(data, dtype=object)
    if arr.size == 0 and shape is not None:
        return np.empty(shape, dtype=object)
    arr = np.asarray(_to_fraction_ufunc(arr), dtype=object)
    if shape is not None and arr.shape != shape:
        raise DimensionError(f"Expected shape {shape}, got {arr.shape}")
    return arr


def zeros(shape: tuple[int, ...]) -> np.ndarray:
    return np.full(shape, Fraction(0), dtype=object)


def is_zero_array(arr: np.ndarray) -> bool:
    return not any(v != 0 for v in arr.flat)


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = arr.copy()
    arr.flags.writeable = False
    return arr


def format_scalar(value: Fraction) -> str:
    return str(value)


def format_value(value: Any) -> str:
    """Render a scalar, vector or matrix of Fractions compactly."""
    if isinstance(value, np.ndarray):
        value = value.tolist()
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(format_value(v) for v in value) + "]"
    return format_scalar(value)


def as_nested(value: Any) -> Any:
    """Turn arrays of Fractions into nested tuples of Fractions (hashable, comparable)."""
    if isinstance(value, np.ndarray):
        if value.ndim == 0:
            return value.item()
        return tuple(as_nested(v) for v in value)
    return value


# --- Exact linear algebra bridges ---


def to_sympy(arr: np.ndarray) -> sympy.Matrix:
    rows, cols = arr.shape
    flat = [sympy.Rational(v.numerator, v.denominator) for v in arr.flat]
    return sympy.Matrix(rows, cols, flat)


def from_sympy(mat: sympy.Matrix) -> np.ndarray:
    return fraction_array([[mat[i, j] for j in range(mat.cols)] for i in range(mat.rows)],
                          shape=(mat.rows, mat.cols) if mat.rows * mat.cols == 0 else None)


# --- Structure classes ---


class Kind(str, Enum):
    LIE = "lie"
    PRELIE = "prelie"
    ASSOCIATIVE = "associative"
    DENDRIFORM = "dendriform"
    L_DENDRIFORM = "l-dendriform"
    QUADRI = "quadri"
    L_QUADRI = "l-quadri"
    OCTO = "octo"
    L_OCTO = "l-octo"
    RAW = "raw"

    @classmethod
    def parse(cls, value: str | Kind) -> Kind:
        if isinstance(value, Kind):
            return value
        try:
            return cls(value.strip().lower())
        except ValueError as e:
            names = ", ".join(k.value for k in cls)
            raise UnknownKindError(f"Unknown structure class '{value}' (expected one of: {names})") from e

    @property
    def op_names(self) -> tuple[str, ...]:
        return KIND_OPS[self]

    @property
    def arity(self) -> int:
        return len(KIND_OPS[self])

    @property
    def is_strong(self) -> bool:
        return self in STRONG_TO_WEAK

    @property
    def weak(self) -> Kind:
        """The L-counterpart of a strong-form class (itself otherwise)."""
        return STRONG_TO_WEAK.get(self, self)

    @property
    def strong(self) -> Kind | None:
        for strong, weak in STRONG_TO_WEAK.items():
            if weak is self:
                return strong
        return None


KIND_OPS: dict[Kind, tuple[str, ...]] = {
    Kind.LIE: ("bracket",),
    Kind.PRELIE: ("circ",),
    Kind.ASSOCIATIVE: ("circ",),
    Kind.DENDRIFORM: ("tri_r", "tri_l"),
    Kind.L_DENDRIFORM: ("tri_r", "tri_l"),
    Kind.QUADRI: ("se", "ne", "nw", "sw"),
    Kind.L_QUADRI: ("se", "ne", "nw", "sw"),
    Kind.OCTO: ("se1", "se2", "ne1", "ne2", "nw1", "nw2", "sw1", "sw2"),
    Kind.L_OCTO: ("se1", "se2", "ne1", "ne2", "nw1", "nw2", "sw1", "sw2"),
    Kind.RAW: (),
}

STRONG_TO_WEAK: dict[Kind, Kind] = {
    Kind.ASSOCIATIVE: Kind.PRELIE,
    Kind.DENDRIFORM: Kind.L_DENDRIFORM,
    Kind.QUADRI: Kind.L_QUADRI,
    Kind.OCTO: Kind.L_OCTO,
}

# Display glyphs for canonical operation names.
OP_SYMBOLS: dict[str, str] = {
    "se": "↘", "ne": "↗", "nw": "↖", "sw": "↙",
    "succ": "≻", "prec": "≺", "vee": "∨", "wedge": "∧",
    "tri_r": "▷", "tri_l": "◁", "circ": "∘", "bullet": "•",
    "star": "∗", "bracket": "[,]",
}


def op_symbol(name: str) -> str:
    base = name.rstrip("0123456789")
    suffix = name[len(base):]
    return OP_SYMBOLS.get(base, base) + suffix


# --- Structure constants ---


@dataclass(frozen=True, eq=False)
class OpTensor:
    """Structure constants c[i, j, k] with e_i op e_j = sum_k c[i, j, k] e_k."""

    coeffs: np.ndarray

    def __post_init__(self):
        arr = self.coeffs
        if not (isinstance(arr, np.ndarray) and arr.dtype == object and arr.ndim == 3 and arr.size == 0):
            arr = fraction_array(arr)
        if arr.ndim != 3 or len(set(arr.shape)) != 1:
            raise DimensionError(f"Structure constants must be n x n x n, got shape {arr.shape}")
        object.__setattr__(self, "coeffs", _frozen(arr))

    @classmethod
    def zeros(cls, dim: int) -> OpTensor:
        return cls(zeros((dim, dim, dim)))

    @classmethod
    def from_entries(cls, dim: int, entries: Mapping[tuple[int, int, int], Any]) -> OpTensor:
        arr = zeros((dim, dim, dim))
        for (i, j, k), value in entries.items():
            arr[i, j, k] = to_fraction(value)
        return cls(arr)

    @property
    def dim(self) -> int:
        return self.coeffs.shape[0]

    @property
    def is_zero(self) -> bool:
        return is_zero_array(self.coeffs)

    def nonzero(self) -> list[tuple[tuple[int, int, int], Fraction]]:
        return [
            ((int(i), int(j), int(k)), self.coeffs[i, j, k])
            for i, j, k in np.ndindex(*self.coeffs.shape)
            if self.coeffs[i, j, k] != 0
        ]

    def scale(self, factor: Any) -> OpTensor:
        return OpTensor(self.coeffs * to_fraction(factor))

    def __add__(self, other: OpTensor) -> OpTensor:
        self._check_dim(other)
        return OpTensor(self.coeffs + other.coeffs)

    def __sub__(self, other: OpTensor) -> OpTensor:
        self._check_dim(other)
        return OpTensor(self.coeffs - other.coeffs)

    def __neg__(self) -> OpTensor:
        return OpTensor(-self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OpTensor):
            return NotImplemented
        return self.coeffs.shape == other.coeffs.shape and bool(np.all(self.coeffs == other.coeffs))

    __hash__ = None

    def __repr__(self) -> str:
        terms = ", ".join(f"{i}{j}->{k}:{v}" for (i, j, k), v in self.nonzero())
        return f"OpTensor(dim={self.dim}, {{{terms}}})"

    def _check_dim(self, other: OpTensor) -> None:
        if self.dim != other.dim:
            raise DimensionError(f"Dimension mismatch: {self.dim} vs {other.dim}")


@dataclass(frozen=True, eq=False)
class MultiAlgebra:
    """A finite-dimensional space with a named family of bilinear operations.

    A declared kind is a claim; certificates come from axiom verification.
    """

    dim: int
    ops: dict[str, OpTensor]
    kind: Kind = Kind.RAW
    name: str = ""

    def __post_init__(self):
        kind = Kind.parse(self.kind)
        object.__setattr__(self, "kind", kind)
        if self.dim < 0:
            raise DimensionError(f"Dimension must be non-negative, got {self.dim}")
        ops = {}
        for op_name, tensor in self.ops.items():
            if not isinstance(tensor, OpTensor):
                tensor = OpTensor(tensor)
            if tensor.dim != self.dim:
                raise DimensionError(
                    f"Operation '{op_name}' has dimension {tensor.dim}, algebra has {self.dim}"
                )
            ops[op_name] = tensor
        if kind is not Kind.RAW:
            expected = kind.op_names
            if set(ops) != set(expected):
                raise ArityError(
                    f"A {kind.value} algebra needs operations {', '.join(expected)}; "
                    f"got {', '.join(ops) or 'none'}"
                )
            ops = {name: ops[name] for name in expected}
        object.__setattr__(self, "ops", ops)

    @classmethod
    def zero(cls, kind: Kind | str, dim: int, name: str = "") -> MultiAlgebra:
        kind = Kind.parse(kind)
        return cls(dim, {op: OpTensor.zeros(dim) for op in kind.op_names}, kind, name)

    @property
    def op_names(self) -> tuple[str, ...]:
        return tuple(self.ops)

    @property
    def arity(self) -> int:
        return len(self.ops)

    def op(self, name: str) -> OpTensor:
        try:
            return self.ops[name]
        except KeyError:
            raise UnknownOperationError(name, self.op_names) from None

    def with_kind(self, kind: Kind | str, name: str | None = None) -> MultiAlgebra:
        return MultiAlgebra(self.dim, dict(self.ops), Kind.parse(kind), self.name if name is None else name)

    def same_ops(self, other: MultiAlgebra) -> bool:
        """Tensor equality of the operation families, ignoring kind and name."""
        return (
            self.dim == other.dim
            and self.op_names == other.op_names
            and all(self.ops[n] == other.ops[n] for n in self.op_names)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiAlgebra):
            return NotImplemented
        return self.kind is other.kind and self.same_ops(other)

    __hash__ = None

    @property
    def label(self) -> str:
        return self.name or f"{self.kind.value} algebra (dim {self.dim})"


# --- Maps and forms ---


def _square_check(arr: np.ndarray, what: str) -> None:
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionError(f"{what} must be square, got shape {arr.shape}")


@dataclass(frozen=True, eq=False)
class LinearMap:
    """Matrix of a linear map in the column convention: column j is the image of e_j."""

    entries: np.ndarray
    domain: str = ""
    codomain: str = ""

    def __post_init__(self):
        arr = self.entries
        if not (isinstance(arr, np.ndarray) and arr.dtype == object and arr.ndim == 2 and arr.size == 0):
            arr = fraction_array(arr)
        if arr.ndim != 2:
            raise DimensionError(f"A linear map needs a matrix, got shape {arr.shape}")
        object.__setattr__(self, "entries", _frozen(arr))

    @classmethod
    def identity(cls, dim: int) -> LinearMap:
        arr = zeros((dim, dim))
        for i in range(dim):
            arr[i, i] = Fraction(1)
        return cls(arr)

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> LinearMap:
        return cls(zeros((rows, rows if cols is None else cols)))

    @classmethod
    def diagonal(cls, values: Iterable[Any]) -> LinearMap:
        values = [to_fraction(v) for v in values]
        arr = zeros((len(values), len(values)))
        for i, v in enumerate(values):
            arr[i, i] = v
        return cls(arr)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_zero(self) -> bool:
        return is_zero_array(self.entries)

    def apply(self, vector: Any) -> np.ndarray:
        vector = fraction_array(vector)
        if vector.shape != (self.cols,):
            raise DimensionError(f"Map takes vectors of length {self.cols}, got {vector.shape}")
        if self.cols == 0:
            return zeros((self.rows,))
        return self.entries.dot(vector)

    def __matmul__(self, other: LinearMap) -> LinearMap:
        if self.cols != other.rows:
            raise DimensionError(f"Cannot compose {self.rows}x{self.cols} with {other.rows}x{other.cols}")
        if self.cols == 0:
            return LinearMap.zeros(self.rows, other.cols)
        return LinearMap(self.entries.dot(other.entries), other.domain, self.codomain)

    def __add__(self, other: LinearMap) -> LinearMap:
        return LinearMap(self.entries + other.entries, self.domain, self.codomain)

    def __sub__(self, other: LinearMap) -> LinearMap:
        return LinearMap(self.entries - other.entries, self.domain, self.codomain)

    def __neg__(self) -> LinearMap:
        return LinearMap(-self.entries, self.domain, self.codomain)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.entries.shape == other.entries.shape and bool(np.all(self.entries == other.entries))

    __hash__ = None

    def transpose(self) -> LinearMap:
        return LinearMap(self.entries.T, self.codomain, self.domain)

    def det(self) -> Fraction:
        _square_check(self.entries, "Determinant input")
        return to_fraction(to_sympy(self.entries).det())

    @property
    def is_invertible(self) -> bool:
        return self.is_square and self.det() != 0

    def inverse(self) -> LinearMap:
        if not self.is_invertible:
            raise SingularError(f"Map of shape {self.rows}x{self.cols} is not invertible")
        return LinearMap(from_sympy(to_sympy(self.entries).inv()), self.codomain, self.domain)

    def rank(self) -> int:
        if self.entries.size == 0:
            return 0
        return to_sympy(self.entries).rank()

    def commutes_with(self, other: LinearMap) -> bool:
        return self @ other == other @ self


class Symmetry(str, Enum):
    SYMMETRIC = "symmetric"
    SKEW = "skew"
    NONE = "none"


@dataclass(frozen=True, eq=False)
class BilinearForm:
    """B(e_i, e_j) = entries[i, j]."""

    entries: np.ndarray
    symmetry: Symmetry = field(init=False)

    def __post_init__(self):
        arr = self.entries
        if not (isinstance(arr, np.ndarray) and arr.dtype == object and arr.ndim == 2 and arr.size == 0):
            arr = fraction_array(arr)
        _square_check(arr, "A bilinear form")
        object.__setattr__(self, "entries", _frozen(arr))
        if np.all(arr == arr.T):
            tag = Symmetry.SYMMETRIC
        elif np.all(arr == -arr.T):
            tag = Symmetry.SKEW
        else:
            tag = Symmetry.NONE
        object.__setattr__(self, "symmetry", tag)

    @classmethod
    def zeros(cls, dim: int) -> BilinearForm:
        return cls(zeros((dim, dim)))

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def is_symmetric(self) -> bool:
        return bool(np.all(self.entries == self.entries.T))

    @property
    def is_skew(self) -> bool:
        return bool(np.all(self.entries == -self.entries.T))

    @property
    def is_zero(self) -> bool:
        return is_zero_array(self.entries)

    def det(self) -> Fraction:
        return to_fraction(to_sympy(self.entries).det())

    @property
    def is_nondegenerate(self) -> bool:
        return self.det() != 0

    def gram(self) -> LinearMap:
        return LinearMap(self.entries)

    def __call__(self, x: Any, y: Any) -> Fraction:
        x = fraction_array(x)
        y = fraction_array(y)
        return sum((x[i] * self.entries[i, j] * y[j] for i in range(self.dim) for j in range(self.dim)),
                   Fraction(0))

    def transpose(self) -> BilinearForm:
        return BilinearForm(self.entries.T)

    def __add__(self, other: BilinearForm) -> BilinearForm:
        return BilinearForm(self.entries + other.entries)

    def __sub__(self, other: BilinearForm) -> BilinearForm:
        return BilinearForm(self.entries - other.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BilinearForm):
            return NotImplemented
        return self.entries.shape == other.entries.shape and bool(np.all(self.entries == other.entries))

    __hash__ = None


# r = sum r[a, b] e_a (x) e_b is read as the map A* -> A with r(e_b*) = sum_a r[a, b] e_a,
# i.e. column b of the map matrix is the image of e_b*. Flip to read rows instead.
TENSOR_MAP_TRANSPOSED = False


@dataclass(frozen=True, eq=False)
class TensorPair:
    """An element r = sum r[a, b] e_a (x) e_b of A (x) A."""

    entries: np.ndarray

    def __post_init__(self):
        arr = self.entries
        if not (isinstance(arr, np.ndarray) and arr.dtype == object and arr.ndim == 2 and arr.size == 0):
            arr = fraction_array(arr)
        _square_check(arr, "A tensor in A (x) A")
        object.__setattr__(self, "entries", _frozen(arr))

    @classmethod
    def zeros(cls, dim: int) -> TensorPair:
        return cls(zeros((dim, dim)))

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def is_symmetric(self) -> bool:
        return bool(np.all(self.entries == self.entries.T))

    @property
    def is_skew(self) -> bool:
        return bool(np.all(self.entries == -self.entries.T))

    @property
    def is_zero(self) -> bool:
        return is_zero_array(self.entries)

    def swap(self) -> TensorPair:
        """The exchanging operator sigma: a (x) b -> b (x) a."""
        return TensorPair(self.entries.T)

    def as_map(self) -> LinearMap:
        arr = self.entries.T if TENSOR_MAP_TRANSPOSED else self.entries
        return LinearMap(arr, "A*", "A")

    @classmethod
    def from_map(cls, linear_map: LinearMap) -> TensorPair:
        arr = linear_map.entries
        return cls(arr.T if TENSOR_MAP_TRANSPOSED else arr)

    def __sub__(self, other: TensorPair) -> TensorPair:
        return TensorPair(self.entries - other.entries)

    def __add__(self, other: TensorPair) -> TensorPair:
        return TensorPair(self.entries + other.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorPair):
            return NotImplemented
        return self.entries.shape == other.entries.shape and bool(np.all(self.entries == other.entries))

    __hash__ = None


# T[i, j, k] is the coefficient of e_i (x) e_j (x) e_k.
Rank3Tensor = np.ndarray


# --- Identities ---


@dataclass(frozen=True)
class RecipeTerm:
    """One summand coeff * op(x, y), or coeff * op(y, x) when swapped."""

    coeff: Fraction
    op: str
    swapped: bool = False

    def __str__(self) -> str:
        body = f"swap({self.op})" if self.swapped else self.op
        return body if self.coeff == 1 else f"{self.coeff}*{body}"


@dataclass(frozen=True)
class Term:
    """A signed product of variables, at most one level nested.

    nested == "right":  a outer (b inner c)
    nested == "left":   (a inner b) outer c
    nested == "":       a outer b
    """

    coeff: Fraction
    outer: str
    variables: tuple[str, ...]
    inner: str | None = None
    nested: str = ""

    def __str__(self) -> str:
        if self.nested == "right":
            a, b, c = self.variables
            body = f"{a} {self.outer} ({b} {self.inner} {c})"
        elif self.nested == "left":
            a, b, c = self.variables
            body = f"({a} {self.inner} {b}) {self.outer} {c}"
        else:
            a, b = self.variables
            body = f"{a} {self.outer} {b}"
        if self.coeff == 1:
            return body
        if self.coeff == -1:
            return f"-{body}"
        return f"{self.coeff}*{body}"

    @property
    def op_names(self) -> set[str]:
        return {self.outer} | ({self.inner} if self.inner else set())


@dataclass(frozen=True)
class Identity:
    name: str
    lhs: tuple[Term, ...]
    rhs: tuple[Term, ...] = ()
    strong_form: bool = False

    @property
    def variables(self) -> tuple[str, ...]:
        names = {v for term in self.lhs + self.rhs for v in term.variables}
        return tuple(sorted(names))

    @property
    def op_names(self) -> set[str]:
        return set().union(*(t.op_names for t in self.lhs + self.rhs)) if self.lhs or self.rhs else set()

    def __str__(self) -> str:
        def side(terms: tuple[Term, ...]) -> str:
            if not terms:
                return "0"
            text = " + ".join(str(t) for t in terms)
            return text.replace("+ -", "- ")
        return f"{side(self.lhs)} = {side(self.rhs)}"


@dataclass(frozen=True)
class AxiomSystem:
    kind: Kind
    ops: tuple[str, ...]
    identities: tuple[Identity, ...]
    derived_ops: dict[str, str] = field(default_factory=dict)
    directions: dict[str, str] = field(default_factory=dict)
    version: int = 1

    @property
    def name(self) -> str:
        return self.kind.value

    @property
    def arity(self) -> int:
        return len(self.ops)


@dataclass(frozen=True)
class FunctorRecipe:
    """A derived structure: one recipe per target operation over the source namespace."""

    name: str
    source: Kind
    target: Kind
    recipes: dict[str, str]
    strong_target: Kind | None = None
    identities: dict[str, str] = field(default_factory=dict)

    @property
    def arity(self) -> int:
        return len(self.recipes)

    def target_for(self, source_kind: Kind) -> Kind:
        if source_kind.is_strong and self.strong_target is not None:
            return self.strong_target
        return self.target


# --- Verification reports ---


@dataclass(frozen=True)
class Failure:
    """A failed check at a basis tuple, with both evaluated sides."""

    check: str
    indices: tuple[int, ...]
    lhs: Any
    rhs: Any
    basis: str = "e"

    @property
    def witness(self) -> str:
        return "(" + ", ".join(f"{self.basis}{i + 1}" for i in self.indices) + ")"

    def describe(self) -> str:
        return f"{self.check} fails at {self.witness}: lhs={format_value(self.lhs)}, rhs={format_value(self.rhs)}"

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.check,
            "witness": [i + 1 for i in self.indices],
            "basis": self.basis,
            "lhs": format_value(self.lhs),
            "rhs": format_value(self.rhs),
        }


@dataclass
class VerificationReport:
    """Outcome of an exhaustive check; `checked` counts evaluated (check, basis tuple) pairs."""

    subject: str
    system: str
    failures: list[Failure] = field(default_factory=list)
    checked: int = 0
    checks: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.failures

    @property
    def failed_checks(self) -> list[str]:
        seen: list[str] = []
        for f in self.failures:
            if f.check not in seen:
                seen.append(f.check)
        return seen

    def status_of(self, check: str) -> bool:
        return all(f.check != check for f in self.failures)

    @classmethod
    def combine(cls, subject: str, system: str, reports: Iterable[VerificationReport]) -> VerificationReport:
        merged = cls(subject, system)
        for report in reports:
            merged.failures.extend(report.failures)
            merged.checked += report.checked
            merged.checks.extend(report.checks)
            merged.notes.extend(report.notes)
        return merged

    def to_dict(self) -> dict[str, Any]:
        return {
            "subject": self.subject,
            "system": self.system,
            "holds": self.holds,
            "checked": self.checked,
            "checks": list(self.checks),
            "failures": [f.to_dict() for f in self.failures],
            "notes": list(self.notes),
        }


# --- Bimodules and O-operators ---


class BimoduleShape(str, Enum):
    LIE = "lie"
    PRELIE = "prelie"
    LDEND = "ldend"

    @property
    def action_names(self) -> tuple[str, ...]:
        return SHAPE_ACTIONS[self]

    @property
    def base_kind(self) -> Kind:
        return {
            BimoduleShape.LIE: Kind.LIE,
            BimoduleShape.PRELIE: Kind.PRELIE,
            BimoduleShape.LDEND: Kind.L_DENDRIFORM,
        }[self]


SHAPE_ACTIONS: dict[BimoduleShape, tuple[str, ...]] = {
    BimoduleShape.LIE: ("rho",),
    BimoduleShape.PRELIE: ("l", "r"),
    BimoduleShape.LDEND: ("l_tri_r", "r_tri_r", "l_tri_l", "r_tri_l"),
}


@dataclass(frozen=True, eq=False)
class Bimodule:
    """Actions a[x, v_in, v_out]: the endomorphism of x sends v_in to sum a[x, v_in, :]."""

    base: MultiAlgebra
    module_dim: int
    actions: dict[str, np.ndarray]
    shape: BimoduleShape
    name: str = ""

    def __post_init__(self):
        shape = BimoduleShape(self.shape)
        object.__setattr__(self, "shape", shape)
        expected = shape.action_names
        if set(self.actions) != set(expected):
            raise ArityError(f"A {shape.value} bimodule needs actions {', '.join(expected)}")
        want = (self.base.dim, self.module_dim, self.module_dim)
        actions = {}
        for action_name in expected:
            arr = self.actions[action_name]
            if not (isinstance(arr, np.ndarray) and arr.dtype == object and arr.size == 0):
                arr = fraction_array(arr)
            if arr.shape != want:
                raise DimensionError(f"Action '{action_name}' has shape {arr.shape}, expected {want}")
            actions[action_name] = _frozen(arr)
        object.__setattr__(self, "actions", actions)

    def action(self, name: str) -> np.ndarray:
        try:
            return self.actions[name]
        except KeyError:
            raise UnknownOperationError(name, self.shape.action_names) from None

    def matrix(self, name: str, x: Any) -> np.ndarray:
        """Matrix M[out, in] of the action of the base vector x."""
        x = fraction_array(x)
        a = self.action(name)
        if self.base.dim == 0:
            return zeros((self.module_dim, self.module_dim))
        return np.tensordot(x, a, axes=([0], [0])).T

    @property
    def label(self) -> str:
        return self.name or f"{self.shape.value} bimodule over {self.base.label}"


@dataclass(frozen=True)
class ImageAlgebra:
    """A structure on the image T(V) in the reduced echelon basis of that subspace.

    Column k of `inclusion` is the k-th basis vector of the image, written in A.
    """

    algebra: MultiAlgebra
    inclusion: LinearMap

    @property
    def rank(self) -> int:
        return self.inclusion.cols


@dataclass(frozen=True, eq=False)
class OOperator:
    """A linear map T: V -> A together with the bimodule (V, actions) it is checked against."""

    T: LinearMap
    context: Bimodule

    def __post_init__(self):
        if self.T.rows != self.context.base.dim or self.T.cols != self.context.module_dim:
            raise DimensionError(
                f"T must be {self.context.base.dim}x{self.context.module_dim}, "
                f"got {self.T.rows}x{self.T.cols}"
            )


# --- Tensor equations and forms ---


@dataclass(frozen=True)
class CanonicalSolution:
    """r = sum e_i (x) e_i* - e_i* (x) e_i in each semidirect product over A*, and its form."""

    ambients: dict[str, MultiAlgebra]
    r: TensorPair
    form: BilinearForm


@dataclass
class EquivalenceSuite:
    """The four conditions on a symmetric r over an L-quadri-algebra."""

    conditions: dict[str, bool]

    @property
    def agree(self) -> bool:
        return len(set(self.conditions.values())) <= 1


@dataclass
class CentralExtension:
    """A extended by one central vector c (last basis index)."""

    algebra: MultiAlgebra
    lquadri: VerificationReport
    conditions: VerificationReport
    omega: dict[str, VerificationReport] = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        return self.lquadri.holds == self.conditions.holds


@dataclass(frozen=True)
class CocycleLift:
    """The L-quadri-algebra determined by an L-dendriform algebra with a nondegenerate
    2-cocycle, and the depth and vertical algebras read off the same form."""

    lquadri: MultiAlgebra
    depth: MultiAlgebra
    vertical: MultiAlgebra
