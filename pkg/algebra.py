"""Core combinators on structure constants: evaluation, recipes, opposites and contractions."""

from __future__ import annotations

import logging
import re
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Any, Callable, Iterable, Mapping, Sequence, TypeVar

import numpy as np

from errors import AlgebraError, DimensionError, UnknownOperationError
from models import (
    Failure,
    MultiAlgebra,
    OpTensor,
    RecipeTerm,
    as_nested,
    fraction_array,
    to_fraction,
    zeros,
)

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


# --- Vectors ---


def basis_vector(dim: int, index: int) -> np.ndarray:
    vec = zeros((dim,))
    vec[index] = Fraction(1)
    return vec


def _as_vector(value: Any, dim: int, what: str) -> np.ndarray:
    vec = fraction_array(value) if len(value) else zeros((0,))
    if vec.shape != (dim,):
        raise DimensionError(f"{what} must have length {dim}, got {vec.shape[0] if vec.ndim else 0}")
    return vec


def evaluate(alg: MultiAlgebra, op: str, x: Any, y: Any) -> np.ndarray:
    """Bilinear extension of the structure constants: x op y as a coefficient vector."""
    coeffs = alg.op(op).coeffs
    x = _as_vector(x, alg.dim, "x")
    y = _as_vector(y, alg.dim, "y")
    if alg.dim == 0:
        return zeros((0,))
    return np.tensordot(np.tensordot(x, coeffs, axes=([0], [0])), y, axes=([0], [0]))


# --- Recipes ---


_RECIPE_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:(?P<coeff>\d+(?:/\d+)?)\s*\*\s*)?"
    r"(?:swap\(\s*(?P<swapped>\w+)\s*\)|(?P<direct>[A-Za-z_]\w*))\s*"
)


def parse_recipe(text: str) -> tuple[RecipeTerm, ...]:
    """Parse a formal combination such as 'se - swap(nw)' or '2*circ + swap(circ)'."""
    source = text.strip()
    if source in ("", "0"):
        return ()
    terms = []
    pos = 0
    while pos < len(source):
        match = _RECIPE_TERM.match(source, pos)
        if not match or match.end() == pos:
            raise AlgebraError(f"Cannot parse recipe '{text}' at position {pos}")
        if terms and not match.group("sign"):
            raise AlgebraError(f"Missing '+' or '-' before term in recipe '{text}'")
        coeff = to_fraction(match.group("coeff") or 1)
        if match.group("sign") == "-":
            coeff = -coeff
        op = match.group("swapped") or match.group("direct")
        terms.append(RecipeTerm(coeff, op, swapped=match.group("swapped") is not None))
        pos = match.end()
    return tuple(terms)


def combine(namespace: Mapping[str, OpTensor], recipe: str | Sequence[RecipeTerm], dim: int) -> OpTensor:
    terms = parse_recipe(recipe) if isinstance(recipe, str) else tuple(recipe)
    result = zeros((dim, dim, dim))
    for term in terms:
        if term.op not in namespace:
            raise UnknownOperationError(term.op, tuple(namespace))
        coeffs = namespace[term.op].coeffs
        if term.swapped:
            coeffs = np.transpose(coeffs, (1, 0, 2))
        result = result + coeffs * term.coeff
    return OpTensor(result)


def combine_ops(alg: MultiAlgebra, recipe: str | Sequence[RecipeTerm]) -> OpTensor:
    """Structure constants of a formal linear combination of the algebra's operations."""
    return combine(alg.ops, recipe, alg.dim)


def resolve_derived(alg: MultiAlgebra, derived: Mapping[str, str]) -> dict[str, OpTensor]:
    """Primary operations plus derived ones, each recipe seeing everything defined before it."""
    namespace: dict[str, OpTensor] = dict(alg.ops)
    for name, recipe in derived.items():
        namespace[name] = combine(namespace, recipe, alg.dim)
    return namespace


def opposite(t: OpTensor) -> OpTensor:
    """(x, y) -> t(y, x)."""
    return OpTensor(np.transpose(t.coeffs, (1, 0, 2)))


# --- Regular actions and contractions ---
# Action tensors are a[x, v_in, v_out]; operation tensors c[x, y, out].


def left_action(t: OpTensor) -> np.ndarray:
    """L(x)v = x op v."""
    return t.coeffs


def right_action(t: OpTensor) -> np.ndarray:
    """R(x)v = v op x."""
    return np.transpose(t.coeffs, (1, 0, 2))


def nest_right(outer: np.ndarray, inner: np.ndarray) -> np.ndarray:
    """R[a, b, c, k] = coefficient of e_k in e_a outer (e_b inner e_c)."""
    n = outer.shape[0]
    if n == 0:
        return zeros((0, 0, 0, 0))
    return np.transpose(np.tensordot(outer, inner, axes=([1], [2])), (0, 2, 3, 1))


def nest_left(outer: np.ndarray, inner: np.ndarray) -> np.ndarray:
    """R[a, b, c, k] = coefficient of e_k in (e_a inner e_b) outer e_c."""
    n = outer.shape[0]
    if n == 0:
        return zeros((0, 0, 0, 0))
    return np.tensordot(inner, outer, axes=([2], [0]))


def action_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """P[x, y, i, o]: the endomorphism a(x) b(y), i.e. b(y) applied first."""
    n, m = a.shape[0], a.shape[1]
    if n == 0 or m == 0:
        return zeros((n, n, m, m))
    return np.transpose(np.tensordot(b, a, axes=([2], [1])), (2, 0, 1, 3))


def action_of_product(c: np.ndarray, a: np.ndarray) -> np.ndarray:
    """P[x, y, i, o]: the endomorphism a(x op y) where c holds the op."""
    n, m = a.shape[0], a.shape[1]
    if n == 0 or m == 0:
        return zeros((n, n, m, m))
    return np.tensordot(c, a, axes=([2], [0]))


def swap_pair(arr: np.ndarray) -> np.ndarray:
    """Exchange the first two axes, i.e. read P[x, y, ...] as P[y, x, ...]."""
    return np.swapaxes(arr, 0, 1)


# --- Witnesses ---


def compare(check: str, lhs: np.ndarray, rhs: np.ndarray, index_axes: int, basis: str = "e") -> Failure | None:
    """First basis tuple (lexicographic) where lhs and rhs differ.

    The leading `index_axes` axes enumerate basis tuples; the rest hold the compared value.
    """
    if lhs.shape != rhs.shape:
        raise DimensionError(f"{check}: cannot compare shapes {lhs.shape} and {rhs.shape}")
    if lhs.size == 0:
        return None
    diff = np.asarray(lhs != rhs, dtype=bool)
    if diff.ndim > index_axes:
        diff = diff.any(axis=tuple(range(index_axes, diff.ndim)))
    hits = np.argwhere(diff)
    if len(hits) == 0:
        return None
    index = tuple(int(i) for i in hits[0])
    return Failure(check, index, as_nested(lhs[index]), as_nested(rhs[index]), basis)


# --- Workers ---


def parallel_map(func: Callable[[T], R], items: Iterable[T], workers: int = 1) -> list[R]:
    """Map preserving input order; uses a thread pool when more than one worker is allowed."""
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    logger.debug("Dispatching %d work items to %d workers", len(items), workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))
