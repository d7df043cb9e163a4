"""Constructions built on the operator layer: reshuffled Rota-Baxter lifts, the
cocycle lift of an L-dendriform algebra and exhaustive Rota-Baxter search."""

from __future__ import annotations

import itertools
import logging
from fractions import Fraction
from typing import Any, Iterable

import numpy as np

from algebra import parallel_map
from bimodules import o_operator_holds, rb_tower, regular_bimodule, shape_of
from errors import PreconditionError, SearchCapError, SingularError
from functors import SYMMETRIES, namespace, symmetry, transpose
from models import (
    BilinearForm,
    CocycleLift,
    Kind,
    LinearMap,
    MultiAlgebra,
    OOperator,
    OpTensor,
    to_fraction,
    zeros,
)
from yang_baxter import (
    NW_SIGN_STATEMENT,
    check_cocycle_ldend,
    companion_sides,
    invariance_sides,
)

logger = logging.getLogger(__name__)

DEFAULT_ENTRIES = (-1, 0, 1)
DEFAULT_SEARCH_CAP = 200_000
SEARCH_CHUNK = 4096


# --- Reshuffled Rota-Baxter lifts ---


def symmetry_variants_of_rb_lquadri(alg: MultiAlgebra, R: LinearMap) -> dict[str, MultiAlgebra]:
    """Transpose and the four symmetries of the L-quadri-algebra lifted from (A, R)."""
    base = rb_tower(alg, [R])
    variants = {"transpose": transpose(base)}
    for which in SYMMETRIES:
        variants[f"sym_{which}"] = symmetry(base, which)
    return variants


def _rx_op_y(R: np.ndarray, c: np.ndarray) -> np.ndarray:
    return np.tensordot(R, c, axes=([0], [0]))


def _y_op_rx(R: np.ndarray, c: np.ndarray) -> np.ndarray:
    return np.tensordot(R, c, axes=([0], [1]))


def _swapped(values: np.ndarray) -> np.ndarray:
    return np.transpose(values, (1, 0, 2))


def rb_closed_forms(alg: MultiAlgebra, R: LinearMap) -> dict[str, MultiAlgebra]:
    """The same five algebras written out directly in terms of tri_r, tri_l and R."""
    ops = namespace(alg, Kind.L_DENDRIFORM)
    P, Q, M = ops["tri_r"].coeffs, ops["tri_l"].coeffs, R.entries
    if alg.dim == 0:
        return {name: MultiAlgebra.zero(Kind.L_QUADRI, 0) for name in ("transpose", "sym_a", "sym_b", "sym_c", "sym_d")}
    Rx_r_y = _rx_op_y(M, P)
    y_r_Rx = _y_op_rx(M, P)
    x_r_Ry = _swapped(y_r_Rx)
    Rx_l_y = _rx_op_y(M, Q)
    y_l_Rx = _y_op_rx(M, Q)
    x_l_Ry = _swapped(y_l_Rx)
    Ry_l_x = _swapped(Rx_l_y)
    table = {
        "transpose": (Rx_r_y, -y_l_Rx, -y_r_Rx, Rx_l_y),
        "sym_a": (Rx_r_y, x_r_Ry, -Ry_l_x, -y_l_Rx),
        "sym_b": (Rx_r_y, -y_l_Rx, -Ry_l_x, x_r_Ry),
        "sym_c": (Rx_r_y, x_r_Ry, x_l_Ry, Rx_l_y),
        "sym_d": (Rx_r_y, Rx_l_y, x_l_Ry, x_r_Ry),
    }
    return {
        name: MultiAlgebra(alg.dim, dict(zip(("se", "ne", "nw", "sw"), map(OpTensor, values))), Kind.L_QUADRI)
        for name, values in table.items()
    }


# --- Cocycle lift ---


def _solve_products(sides: dict[str, np.ndarray], gram_inverse: np.ndarray) -> dict[str, OpTensor]:
    """Products determined by B(x op y, z) = F[x, y, z]."""
    return {name: OpTensor(np.tensordot(F, gram_inverse, axes=([2], [0]))) for name, F in sides.items()}


def lift_via_cocycle(alg: MultiAlgebra, B: BilinearForm, nw_sign: int = NW_SIGN_STATEMENT) -> CocycleLift:
    """L-quadri-algebra whose horizontal algebra is `alg`, read off a nondegenerate skew 2-cocycle."""
    report = check_cocycle_ldend(alg, B)
    if not B.is_nondegenerate:
        raise SingularError("The 2-cocycle is degenerate (a nondegenerate skew form needs even dimension)")
    if not report.holds:
        raise PreconditionError("Form is not a 2-cocycle", report)
    n = alg.dim
    if n == 0:
        empty = MultiAlgebra.zero(Kind.L_QUADRI, 0)
        return CocycleLift(empty, MultiAlgebra.zero(Kind.L_DENDRIFORM, 0), MultiAlgebra.zero(Kind.L_DENDRIFORM, 0))
    gram_inverse = B.gram().inverse().entries
    lquadri = MultiAlgebra(n, _solve_products(invariance_sides(alg, B, nw_sign), gram_inverse),
                           Kind.L_QUADRI, f"cocycle lift of {alg.label}")
    companions = {
        flavor: MultiAlgebra(n, _solve_products(sides, gram_inverse), Kind.L_DENDRIFORM,
                             f"{flavor} companion of {alg.label}")
        for flavor, sides in companion_sides(alg, B).items()
    }
    logger.debug("Lifted %s through a %dx%d cocycle", alg.label, n, n)
    return CocycleLift(lquadri, companions["depth"], companions["vertical"])


# --- Rota-Baxter search ---


def _candidate(index: int, values: tuple[Fraction, ...], n: int, diagonal: bool) -> np.ndarray:
    """Decode a mixed-radix index; the last cell varies fastest (row-major)."""
    cells = n if diagonal else n * n
    digits = []
    for _ in range(cells):
        index, d = divmod(index, len(values))
        digits.append(values[d])
    digits.reverse()
    arr = zeros((n, n))
    if diagonal:
        for i, v in enumerate(digits):
            arr[i, i] = v
    else:
        arr[:, :] = np.array(digits, dtype=object).reshape(n, n)
    return arr


def search_space_size(dim: int, entries: Iterable[Any] = DEFAULT_ENTRIES, diagonal: bool = False) -> int:
    count = len(dict.fromkeys(to_fraction(e) for e in entries))
    return count ** (dim if diagonal else dim * dim)


def search_rb(
    alg: MultiAlgebra,
    entries: Iterable[Any] = DEFAULT_ENTRIES,
    max_results: int | None = None,
    diagonal: bool = False,
    cap: int = DEFAULT_SEARCH_CAP,
    workers: int = 1,
) -> list[LinearMap]:
    """Every weight-zero Rota-Baxter operator with entries in `entries`.

    The zero map comes first; the rest follow in enumeration order (row-major cells,
    entries in the order given).
    """
    shape_of(alg)
    values = tuple(dict.fromkeys(to_fraction(e) for e in entries))
    n = alg.dim
    size = search_space_size(n, values, diagonal)
    if size > cap:
        raise SearchCapError(size, cap)
    context = regular_bimodule(alg)
    logger.debug("Searching %d candidate operators on %s (%d workers)", size, alg.label, workers)

    def scan(bounds: tuple[int, int]) -> list[np.ndarray]:
        found = []
        for index in range(*bounds):
            arr = _candidate(index, values, n, diagonal)
            if all(v == 0 for v in arr.flat):
                continue
            if o_operator_holds(OOperator(LinearMap(arr), context)):
                found.append(arr)
        return found

    results = [LinearMap.zeros(n)]
    chunks = [(start, min(start + SEARCH_CHUNK, size)) for start in range(0, size, SEARCH_CHUNK)]
    wave = max(1, workers)
    for i in range(0, len(chunks), wave):
        for batch in parallel_map(scan, chunks[i:i + wave], workers):
            results.extend(LinearMap(arr) for arr in batch)
        if max_results is not None and len(results) >= max_results:
            break
    return results if max_results is None else results[:max_results]


def commuting_families(maps: list[LinearMap], size: int) -> list[tuple[LinearMap, ...]]:
    """All `size`-tuples (with repetition, in order) of pairwise commuting maps."""
    return [
        family
        for family in itertools.combinations_with_replacement(maps, size)
        if all(a.commutes_with(b) for a, b in itertools.combinations(family, 2))
    ]
