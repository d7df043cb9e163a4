"""Tensor equations in A (x) A, bilinear forms and the bridges between them."""

from __future__ import annotations

import logging
from typing import Callable

import numpy as np

from algebra import combine, compare, parallel_map
from axioms import builtin_system, verify
from bimodules import check_o_operator, coadjoint, dual_bimodule, lquadri_bimodule, semidirect_ldend
from errors import AlgebraError, DimensionError, PreconditionError, SingularError
from functors import SYMMETRIES, lquadri_to_ldend, namespace, reshufflings
from models import (
    BilinearForm,
    CanonicalSolution,
    CentralExtension,
    EquivalenceSuite,
    Kind,
    LinearMap,
    MultiAlgebra,
    OOperator,
    OpTensor,
    Rank3Tensor,
    TensorPair,
    VerificationReport,
    zeros,
)

logger = logging.getLogger(__name__)

SLOT_PATTERNS: dict[str, tuple[int, int, tuple[int, int, int]]] = {
    # pattern: (axis of r fed to the product, axis of s fed to the product, output permutation)
    "12.13": (0, 0, (1, 0, 2)),
    "13.23": (1, 1, (0, 2, 1)),
    "23.12": (0, 1, (2, 1, 0)),
    "12.23": (1, 0, (0, 1, 2)),
    "13.12": (0, 0, (1, 2, 0)),
    "23.13": (1, 1, (2, 0, 1)),
}

# Sign of the nw relation B(x nw y, z) = sign * B(y, z tri_r x).
NW_SIGN_STATEMENT = 1
NW_SIGN_PROOF = -1

EQUIVALENCE_FLAVORS = ("horizontal", "vertical", "depth")


# --- Rank-3 tensors ---


def operations(alg: MultiAlgebra) -> dict[str, OpTensor]:
    """Primary and derived operations of the first family whose names match."""
    for family in (Kind.L_QUADRI, Kind.L_DENDRIFORM, Kind.L_OCTO, Kind.PRELIE, Kind.LIE):
        if set(family.op_names) == set(alg.op_names):
            return namespace(alg, family)
    return dict(alg.ops)


def pairwise_product(alg: MultiAlgebra, r: TensorPair, s: TensorPair, op: str | OpTensor,
                     slots: str) -> Rank3Tensor:
    """r_ab op s_cd with the product taken in the shared slot.

    "12.13" gives sum a_i*a_j (x) b_i (x) b_j, "13.23" gives sum a_i (x) a_j (x) b_i*b_j,
    "23.12" gives sum a_j (x) a_i*b_j (x) b_i; the others are their transposes.
    """
    if slots not in SLOT_PATTERNS:
        raise AlgebraError(f"Unsupported slot pattern '{slots}' (expected one of: {', '.join(SLOT_PATTERNS)})")
    coeffs = (operations(alg)[op] if isinstance(op, str) else op).coeffs
    n = alg.dim
    if r.dim != n or s.dim != n:
        raise DimensionError(f"Tensors must live in A (x) A with dim A = {n}")
    if n == 0:
        return zeros((0, 0, 0))
    r_axis, s_axis, perm = SLOT_PATTERNS[slots]
    half = np.tensordot(r.entries, coeffs, axes=([r_axis], [0]))
    full = np.tensordot(half, s.entries, axes=([1], [s_axis]))
    return np.transpose(full, perm)


Equation = tuple[str, Callable[[], Rank3Tensor], Callable[[], Rank3Tensor]]


def _tensor_report(subject: str, system: str, equations: list[Equation], workers: int) -> VerificationReport:
    report = VerificationReport(subject, system, checks=[name for name, _, _ in equations])

    def run(equation: Equation):
        name, lhs, rhs = equation
        return compare(name, lhs(), rhs(), 3)

    report.failures = [f for f in parallel_map(run, equations, workers) if f is not None]
    return report


def check_cybe(alg: MultiAlgebra, r: TensorPair, workers: int = 1) -> VerificationReport:
    """[r12, r13] + [r12, r23] + [r13, r23] = 0."""
    def lhs():
        return sum((pairwise_product(alg, r, r, "bracket", s) for s in ("12.13", "12.23", "13.23")),
                   zeros((alg.dim,) * 3))

    report = _tensor_report(alg.label, "CYBE", [("CYBE", lhs, lambda: zeros((alg.dim,) * 3))], workers)
    report.checked = alg.dim ** 3
    return report


def check_ld_equation(alg: MultiAlgebra, r: TensorPair, workers: int = 1) -> VerificationReport:
    """r23 tri_l r13 = r13 circ r12 + r23 bullet r12."""
    namespace(alg, Kind.L_DENDRIFORM)

    def P(op: str, slots: str) -> Rank3Tensor:
        return pairwise_product(alg, r, r, op, slots)

    equation = ("LD", lambda: P("tri_l", "23.13"), lambda: P("circ", "13.12") + P("bullet", "23.12"))
    report = _tensor_report(alg.label, "LD-equation", [equation], workers)
    report.checked = alg.dim ** 3
    return report


def lq_equation_sides(alg: MultiAlgebra, r: TensorPair) -> dict[str, tuple[Rank3Tensor, Rank3Tensor]]:
    """Both LQ equations and their sum, as (lhs, rhs) pairs of rank-3 tensors."""
    namespace(alg, Kind.L_QUADRI)

    def P(op: str, slots: str) -> Rank3Tensor:
        return pairwise_product(alg, r, r, op, slots)

    return {
        "LQ-tri_r": (P("tri_r", "13.23"), -(P("vee", "12.23") + P("wedge", "12.23")) + P("nw", "12.13")),
        "LQ-tri_l": (P("tri_l", "13.23"), P("wedge", "12.23") - P("prec", "12.13")),
        "LQ-sum": (P("bullet", "13.23"), -P("sw", "12.13") - P("vee", "12.23")),
    }


def check_lq_equation(alg: MultiAlgebra, r: TensorPair, workers: int = 1) -> VerificationReport:
    """The LQ-equation pair; the sum of the two is reported as a third check."""
    sides = lq_equation_sides(alg, r)
    equations = [(name, (lambda p=pair: p[0]), (lambda p=pair: p[1])) for name, pair in sides.items()]
    report = _tensor_report(alg.label, "LQ-equation", equations, workers)
    report.checked = 2 * alg.dim ** 3
    return report


# --- Forms ---


def form_from_r(r: TensorPair) -> BilinearForm:
    """B(u, v) = <T^-1 u, v> where T is r read as a map A* -> A."""
    T = r.as_map()
    if not T.is_invertible:
        raise SingularError("r is not invertible as a map A* -> A")
    return BilinearForm(T.inverse().entries.T)


def r_from_form(B: BilinearForm) -> TensorPair:
    if not B.is_nondegenerate:
        raise SingularError("Bilinear form is degenerate")
    return TensorPair.from_map(B.gram().inverse().transpose())


def _arrange(values: np.ndarray, order: str) -> np.ndarray:
    """Reindex so axes are (x, y, z); `order` names the variable on each axis of `values`."""
    return np.transpose(values, [order.index(v) for v in "xyz"])


def pair_product_left(B: BilinearForm, op: OpTensor, order: str) -> np.ndarray:
    """B(a op b, c) over all basis triples, with order = "abc" in terms of x, y, z."""
    return _arrange(np.tensordot(op.coeffs, B.entries, axes=([2], [0])), order)


def pair_product_right(B: BilinearForm, op: OpTensor, order: str) -> np.ndarray:
    """B(a, b op c) over all basis triples."""
    return _arrange(np.tensordot(B.entries, op.coeffs, axes=([1], [2])), order)


def _require_symmetry(B: BilinearForm, alg: MultiAlgebra, want: str) -> None:
    if B.dim != alg.dim:
        raise DimensionError(f"Form has dimension {B.dim}, algebra has {alg.dim}")
    if not (B.is_skew if want == "skew" else B.is_symmetric):
        raise PreconditionError(f"Bilinear form must be {want}")


def _form_report(subject: str, system: str, equations: dict[str, tuple[np.ndarray, np.ndarray]],
                 dim: int) -> VerificationReport:
    report = VerificationReport(subject, system, checks=list(equations))
    if dim == 0:
        return report
    for name, (lhs, rhs) in equations.items():
        failure = compare(name, lhs, rhs, 3)
        if failure is not None:
            report.failures.append(failure)
    report.checked = len(equations) * dim ** 3
    return report


def check_cocycle_ldend(alg: MultiAlgebra, B: BilinearForm) -> VerificationReport:
    """B(x tri_l y, z) = -B(y, z circ x) + B(x, z bullet y) for a skew form."""
    _require_symmetry(B, alg, "skew")
    ops = namespace(alg, Kind.L_DENDRIFORM)
    lhs = pair_product_left(B, ops["tri_l"], "xyz")
    rhs = -pair_product_right(B, ops["circ"], "yzx") + pair_product_right(B, ops["bullet"], "xzy")
    return _form_report(alg.label, "2-cocycle (l-dendriform)", {"cocycle": (lhs, rhs)}, alg.dim)


def invariance_sides(ldend: MultiAlgebra, B: BilinearForm, nw_sign: int = NW_SIGN_STATEMENT) -> dict[str, np.ndarray]:
    """Right-hand sides F with B(x op y, z) = F[x, y, z] for the four L-quadri products
    determined by an L-dendriform algebra and a form."""
    ops = namespace(ldend, Kind.L_DENDRIFORM)
    bracket = combine(ops, "bullet - swap(bullet)", ldend.dim)
    return {
        "se": -pair_product_right(B, bracket, "yxz"),
        "ne": -pair_product_right(B, ops["circ"], "yzx"),
        "nw": nw_sign * pair_product_right(B, ops["tri_r"], "yzx"),
        "sw": -pair_product_right(B, ops["bullet"], "yzx"),
    }


def companion_sides(ldend: MultiAlgebra, B: BilinearForm) -> dict[str, dict[str, np.ndarray]]:
    """Right-hand sides of the depth (vee, wedge) and vertical (succ, prec) companions."""
    ops = namespace(ldend, Kind.L_DENDRIFORM)
    return {
        "depth": {
            "tri_r": -pair_product_right(B, ops["bullet"], "yxz"),
            "tri_l": pair_product_right(B, ops["tri_l"], "yxz"),
        },
        "vertical": {
            "tri_r": -pair_product_right(B, ops["circ"], "yxz"),
            "tri_l": -pair_product_right(B, ops["tri_l"], "yzx"),
        },
    }


def check_invariant_lquadri(alg: MultiAlgebra, B: BilinearForm,
                            nw_sign: int = NW_SIGN_STATEMENT) -> VerificationReport:
    """The four invariance relations of a skew form on an L-quadri-algebra."""
    _require_symmetry(B, alg, "skew")
    sides = invariance_sides(lquadri_to_ldend(alg, "horizontal"), B, nw_sign)
    equations = {f"invariance {op}": (pair_product_left(B, alg.op(op), "xyz"), rhs) for op, rhs in sides.items()}
    return _form_report(alg.label, "invariance (l-quadri)", equations, alg.dim)


def check_invariant_ldend_companions(alg: MultiAlgebra, B: BilinearForm) -> VerificationReport:
    """The depth and vertical algebras of an L-quadri-algebra against the companion
    relations of its horizontal algebra and a skew form."""
    _require_symmetry(B, alg, "skew")
    sides = companion_sides(lquadri_to_ldend(alg, "horizontal"), B)
    equations = {}
    for flavor, ops in sides.items():
        algebra = lquadri_to_ldend(alg, flavor)
        for op, rhs in ops.items():
            equations[f"{flavor} {op}"] = (pair_product_left(B, algebra.op(op), "xyz"), rhs)
    return _form_report(alg.label, "companion relations", equations, alg.dim)


def check_cocycle_lquadri(alg: MultiAlgebra, B: BilinearForm) -> VerificationReport:
    """Symmetric 2-cocycle:
    B(x sw y, z) = -B(y, z bullet x) - B(x, z vee y),
    B(x ne y, z) = B(y, x wedge z - z vee x) - B(x, z succ y).
    """
    _require_symmetry(B, alg, "symmetric")
    ops = namespace(alg, Kind.L_QUADRI)
    equations = {
        "cocycle sw": (
            pair_product_left(B, ops["sw"], "xyz"),
            -pair_product_right(B, ops["bullet"], "yzx") - pair_product_right(B, ops["vee"], "xzy"),
        ),
        "cocycle ne": (
            pair_product_left(B, ops["ne"], "xyz"),
            pair_product_right(B, ops["wedge"], "yxz") - pair_product_right(B, ops["vee"], "yzx")
            - pair_product_right(B, ops["succ"], "xzy"),
        ),
    }
    return _form_report(alg.label, "2-cocycle (l-quadri)", equations, alg.dim)


# --- O-operators and tensor solutions ---


def dual_context(alg: MultiAlgebra, flavor: str):
    """Dual of the bimodule of A over its horizontal, vertical or depth algebra."""
    return dual_bimodule(lquadri_bimodule(alg, flavor))


def o_operator_equivalence_suite(alg: MultiAlgebra, r: TensorPair, workers: int = 1) -> EquivalenceSuite:
    """r as an O-operator of the three associated L-dendriform algebras over their dual
    bimodules, and the LQ-equation, each decided independently."""
    if not r.is_symmetric:
        raise PreconditionError("The equivalence needs a symmetric r")
    if r.dim != alg.dim:
        raise DimensionError(f"r has dimension {r.dim}, algebra has {alg.dim}")
    T = r.as_map()
    conditions = {
        flavor: check_o_operator(OOperator(T, dual_context(alg, flavor)), workers).holds
        for flavor in EQUIVALENCE_FLAVORS
    }
    lq = check_lq_equation(alg, r, workers)
    conditions["lq-equation"] = lq.status_of("LQ-tri_r") and lq.status_of("LQ-tri_l")
    suite = EquivalenceSuite(conditions)
    if not suite.agree:
        logger.warning("Equivalence conditions disagree on %s: %s", alg.label, conditions)
    return suite


def _antisymmetrized_block(T: np.ndarray) -> TensorPair:
    n, m = T.shape
    arr = zeros((n + m, n + m))
    arr[:n, n:] = T
    arr[n:, :n] = -T.T
    return TensorPair(arr)


def lift_operator_to_r(op: OOperator) -> tuple[MultiAlgebra, TensorPair]:
    """r = T - sigma(T) in A ⋉ V* over the dual bimodule, with T placed in A (x) V*."""
    ambient = semidirect_ldend(dual_bimodule(op.context))
    return ambient, _antisymmetrized_block(op.T.entries)


def pairing_form(n: int) -> BilinearForm:
    """B(x + a*, y + b*) = -<a*, y> + <x, b*> on A ⊕ A*."""
    arr = zeros((2 * n, 2 * n))
    for i in range(n):
        arr[i, n + i] = 1
        arr[n + i, i] = -1
    return BilinearForm(arr)


def canonical_r(alg: MultiAlgebra, workers: int = 1) -> CanonicalSolution:
    """The three semidirect products over A*, the canonical r and its induced form."""
    report = verify(alg, builtin_system(Kind.L_QUADRI), workers)
    if not report.holds:
        raise PreconditionError(f"{alg.label} is not an L-quadri-algebra", report)
    ambients = {}
    for flavor in EQUIVALENCE_FLAVORS:
        ambient = semidirect_ldend(dual_context(alg, flavor))
        ambients[flavor] = ambient.with_kind(Kind.L_DENDRIFORM, f"{flavor} ambient of {alg.label}")
    r = _antisymmetrized_block(LinearMap.identity(alg.dim).entries)
    return CanonicalSolution(ambients, r, pairing_form(alg.dim))


# --- Central extensions ---


def extension_conditions(alg: MultiAlgebra, B: BilinearForm) -> VerificationReport:
    """B(x ne y, z) = -B(y, z vee x - x wedge z) - B(z succ y, x),
    B(x sw y, z) = -B(z bullet x, y) - B(x, z vee y)."""
    ops = namespace(alg, Kind.L_QUADRI)
    equations = {
        "extension ne": (
            pair_product_left(B, ops["ne"], "xyz"),
            -pair_product_right(B, ops["vee"], "yzx") + pair_product_right(B, ops["wedge"], "yxz")
            - pair_product_left(B, ops["succ"], "zyx"),
        ),
        "extension sw": (
            pair_product_left(B, ops["sw"], "xyz"),
            -pair_product_left(B, ops["bullet"], "zxy") - pair_product_right(B, ops["vee"], "xzy"),
        ),
    }
    return _form_report(alg.label, "central extension conditions", equations, alg.dim)


def extension_algebra(alg: MultiAlgebra, B: BilinearForm) -> MultiAlgebra:
    """A ⊕ Fc; c is the last basis vector and every product involving it is zero."""
    n = alg.dim
    G = B.entries
    corrections = {"se": -G.T, "nw": -G, "ne": G.T, "sw": G}
    ops = {}
    for name in ("se", "ne", "nw", "sw"):
        arr = zeros((n + 1, n + 1, n + 1))
        arr[:n, :n, :n] = alg.op(name).coeffs
        arr[:n, :n, n] = corrections[name]
        ops[name] = OpTensor(arr)
    return MultiAlgebra(n + 1, ops, Kind.L_QUADRI, f"central extension of {alg.label}")


def central_extension(alg: MultiAlgebra, B: BilinearForm, workers: int = 1) -> CentralExtension:
    if B.dim != alg.dim:
        raise DimensionError(f"Form has dimension {B.dim}, algebra has {alg.dim}")
    extension = extension_algebra(alg, B)
    result = CentralExtension(
        extension,
        verify(extension, builtin_system(Kind.L_QUADRI), workers),
        extension_conditions(alg, B),
    )
    if result.conditions.holds:
        omega = BilinearForm(B.entries - B.entries.T)
        for flavor in ("vertical", "depth"):
            result.omega[flavor] = check_cocycle_ldend(lquadri_to_ldend(alg, flavor), omega)
    if not result.consistent:
        logger.warning("Extension of %s: l-quadri %s but conditions %s", alg.label,
                       result.lquadri.holds, result.conditions.holds)
    return result


# --- Reshufflings ---


def transfer_under_symmetry(alg: MultiAlgebra, B: BilinearForm, mode: str = "invariant") -> dict[str, VerificationReport]:
    """Invariance (skew B) or 2-cocycle (symmetric B) on A, its transpose and its four symmetries."""
    if mode == "invariant":
        check = check_invariant_lquadri
    elif mode == "cocycle":
        check = check_cocycle_lquadri
    else:
        raise AlgebraError(f"Unknown mode '{mode}' (expected invariant or cocycle)")
    reports = {name: check(shuffled, B) for name, shuffled in reshufflings(alg).items()}
    answers = {name: report.holds for name, report in reports.items()}
    if len(set(answers.values())) > 1:
        logger.warning("%s answers differ across %s and its %d symmetries: %s",
                       mode, alg.label, len(SYMMETRIES), answers)
    return reports


# --- Bridges ---


def cybe_operator_bridge(alg: MultiAlgebra, r: TensorPair, workers: int = 1) -> dict[str, bool]:
    """A skew r on a Lie algebra: CYBE against r as an O-operator of the coadjoint representation."""
    if not r.is_skew:
        raise PreconditionError("The coadjoint bridge needs a skew-symmetric r")
    result = {
        "cybe": check_cybe(alg, r, workers).holds,
        "o-operator": check_o_operator(OOperator(r.as_map(), coadjoint(alg)), workers).holds,
    }
    if len(set(result.values())) > 1:
        logger.warning("CYBE and coadjoint O-operator disagree on %s: %s", alg.label, result)
    return result


def tensor_form_bridge(alg: MultiAlgebra, r: TensorPair, workers: int = 1) -> dict[str, bool]:
    """An invertible r against its form: skew r on an L-dendriform algebra pairs the
    LD-equation with the 2-cocycle condition, symmetric r on an L-quadri-algebra pairs
    the LQ-equation with the symmetric 2-cocycle condition."""
    B = form_from_r(r)
    if r.is_skew:
        result = {
            "equation": check_ld_equation(alg, r, workers).holds,
            "form": check_cocycle_ldend(alg, B).holds,
        }
    elif r.is_symmetric:
        lq = check_lq_equation(alg, r, workers)
        result = {
            "equation": lq.status_of("LQ-tri_r") and lq.status_of("LQ-tri_l"),
            "form": check_cocycle_lquadri(alg, B).holds,
        }
    else:
        raise PreconditionError("r must be skew-symmetric or symmetric")
    if result["equation"] != result["form"]:
        logger.warning("Equation and form disagree on %s: %s", alg.label, result)
    return result
