"""Bimodules, semidirect products, O-operators, Rota-Baxter operators and the
structures they induce."""

from __future__ import annotations

import logging
from typing import Callable, Sequence

import numpy as np

from algebra import (
    action_of_product,
    action_product,
    combine,
    compare,
    left_action,
    parallel_map,
    right_action,
    swap_pair,
)
from axioms import builtin_system, verify
from errors import ArityError, DimensionError, PreconditionError
from functors import lquadri_to_ldend, lquadri_to_prelie, namespace, subadjacent_lie
from models import (
    Bimodule,
    BimoduleShape,
    Failure,
    ImageAlgebra,
    Kind,
    LinearMap,
    MultiAlgebra,
    OOperator,
    OpTensor,
    VerificationReport,
    from_sympy,
    to_sympy,
    zeros,
)

logger = logging.getLogger(__name__)

INDUCED_KIND = {
    BimoduleShape.LIE: Kind.PRELIE,
    BimoduleShape.PRELIE: Kind.L_DENDRIFORM,
    BimoduleShape.LDEND: Kind.L_QUADRI,
}


# --- Contexts ---


def shape_of(alg: MultiAlgebra) -> BimoduleShape:
    names = set(alg.op_names)
    if names == {"bracket"}:
        return BimoduleShape.LIE
    if names == {"circ"}:
        return BimoduleShape.PRELIE
    if names == {"tri_r", "tri_l"}:
        return BimoduleShape.LDEND
    raise ArityError(f"{alg.label} is not a Lie, pre-Lie or L-dendriform algebra")


def regular_bimodule(alg: MultiAlgebra) -> Bimodule:
    """Adjoint (Lie), (L, R) (pre-Lie) or (L▷, R▷, L◁, R◁) (L-dendriform) on A itself."""
    shape = shape_of(alg)
    if shape is BimoduleShape.LIE:
        actions = {"rho": left_action(alg.op("bracket"))}
    elif shape is BimoduleShape.PRELIE:
        circ = alg.op("circ")
        actions = {"l": left_action(circ), "r": right_action(circ)}
    else:
        tri_r, tri_l = alg.op("tri_r"), alg.op("tri_l")
        actions = {
            "l_tri_r": left_action(tri_r),
            "r_tri_r": right_action(tri_r),
            "l_tri_l": left_action(tri_l),
            "r_tri_l": right_action(tri_l),
        }
    return Bimodule(alg, alg.dim, actions, shape, f"regular bimodule of {alg.label}")


def lquadri_bimodule(alg: MultiAlgebra, flavor: str) -> Bimodule:
    """Left/right multiplications of an L-quadri-algebra as a bimodule of one of its
    associated L-dendriform algebras."""
    se, ne, nw, sw = (alg.op(n) for n in ("se", "ne", "nw", "sw"))
    if flavor == "horizontal":
        actions = (left_action(se), -left_action(nw), left_action(ne), -left_action(sw))
    elif flavor == "vertical":
        actions = (left_action(se), right_action(ne), left_action(sw), right_action(nw))
    elif flavor == "depth":
        actions = (left_action(se), right_action(sw), left_action(ne), right_action(nw))
    else:
        raise ArityError(f"Unknown flavor '{flavor}' (expected horizontal, vertical or depth)")
    base = lquadri_to_ldend(alg, flavor)
    names = BimoduleShape.LDEND.action_names
    return Bimodule(base, alg.dim, dict(zip(names, actions)), BimoduleShape.LDEND,
                    f"{flavor} bimodule of {alg.label}")


def lquadri_prelie_bimodule(alg: MultiAlgebra, flavor: str) -> Bimodule:
    """(L↘, -L↗) over ∘, (L↘, R↖) over ∗, (L↘, -L↙) over •."""
    se = left_action(alg.op("se"))
    if flavor == "circ":
        r = -left_action(alg.op("ne"))
    elif flavor == "star":
        r = right_action(alg.op("nw"))
    elif flavor == "bullet":
        r = -left_action(alg.op("sw"))
    else:
        raise ArityError(f"Unknown flavor '{flavor}' (expected circ, star or bullet)")
    base = lquadri_to_prelie(alg, flavor)
    return Bimodule(base, alg.dim, {"l": se, "r": r}, BimoduleShape.PRELIE, f"{flavor} bimodule of {alg.label}")


def lquadri_representation(alg: MultiAlgebra) -> Bimodule:
    """L↘ as a representation of the sub-adjacent Lie algebra."""
    return Bimodule(subadjacent_lie(alg), alg.dim, {"rho": left_action(alg.op("se"))},
                    BimoduleShape.LIE, f"L_se representation of {alg.label}")


def coadjoint(alg: MultiAlgebra) -> Bimodule:
    """ad* on g*, ad*(x) = -ad(x)^T."""
    if shape_of(alg) is not BimoduleShape.LIE:
        raise ArityError(f"{alg.label} is not a Lie algebra")
    return dual_bimodule(regular_bimodule(alg))


def dual_action(a: np.ndarray) -> np.ndarray:
    """rho*(x) = -rho(x)^T on the dual space."""
    return -np.swapaxes(a, 1, 2)


def dual_bimodule(m: Bimodule) -> Bimodule:
    """The bimodule on V* built from dual actions."""
    if m.shape is BimoduleShape.LIE:
        actions = {"rho": dual_action(m.action("rho"))}
    elif m.shape is BimoduleShape.PRELIE:
        l, r = dual_action(m.action("l")), dual_action(m.action("r"))
        actions = {"l": l - r, "r": -r}
    else:
        lr, rr = dual_action(m.action("l_tri_r")), dual_action(m.action("r_tri_r"))
        ll, rl = dual_action(m.action("l_tri_l")), dual_action(m.action("r_tri_l"))
        actions = {
            "l_tri_r": lr + ll - rr - rl,
            "r_tri_r": rr,
            "l_tri_l": rr - ll,
            "r_tri_l": -(rr + rl),
        }
    return Bimodule(m.base, m.module_dim, actions, m.shape, f"dual of {m.label}")


# --- Bimodule checks ---


def _bimodule_equations(m: Bimodule) -> list[tuple[str, Callable[[], tuple[np.ndarray, np.ndarray]]]]:
    """Each equation as (name, thunk returning lhs and rhs indexed [x, y, in, out])."""
    P = action_product
    Q = action_of_product
    S = swap_pair
    if m.shape is BimoduleShape.LIE:
        rho = m.action("rho")
        bracket = m.base.op("bracket").coeffs
        return [("representation", lambda: (Q(bracket, rho), P(rho, rho) - S(P(rho, rho))))]

    if m.shape is BimoduleShape.PRELIE:
        l, r = m.action("l"), m.action("r")
        circ = m.base.op("circ").coeffs

        def left_symmetry():
            side = P(l, l) - Q(circ, l)
            return side, S(side)

        def mixed():
            return P(l, r) - S(P(r, l)), Q(circ, r) - S(P(r, r))

        return [("l-l", left_symmetry), ("l-r", mixed)]

    ops = namespace(m.base, Kind.L_DENDRIFORM)
    tri_r, tri_l = ops["tri_r"].coeffs, ops["tri_l"].coeffs
    circ, bullet = ops["circ"].coeffs, ops["bullet"].coeffs
    bracket = combine(ops, "bullet - swap(bullet)", m.base.dim).coeffs
    lr, rr = m.action("l_tri_r"), m.action("r_tri_r")
    ll, rl = m.action("l_tri_l"), m.action("r_tri_l")
    return [
        ("l▷ bracket", lambda: (P(lr, lr) - S(P(lr, lr)), Q(bracket, lr))),
        ("l▷ l◁", lambda: (P(lr, ll) - S(P(ll, lr)), Q(circ, ll) + S(P(ll, ll)))),
        ("r▷ of ▷", lambda: (
            Q(tri_r, rr),
            S(P(rr, rr)) + S(P(rr, rl)) + P(lr, rr) - S(P(rr, lr)) - S(P(rr, ll)),
        )),
        ("r▷ of ◁", lambda: (
            Q(tri_l, rr),
            S(P(rl, rr)) + P(ll, rr) + P(ll, rl) - S(P(rl, ll)),
        )),
        ("l▷ r◁", lambda: (P(lr, rl) - S(P(rl, lr)), Q(bullet, rl) - S(P(rl, rl)))),
    ]


def check_bimodule(m: Bimodule, workers: int = 1) -> VerificationReport:
    """Decide the defining operator equations on all basis pairs (x, y)."""
    equations = _bimodule_equations(m)
    report = VerificationReport(m.label, f"{m.shape.value} bimodule", checks=[name for name, _ in equations])
    if m.base.dim == 0 or m.module_dim == 0:
        return report

    def run(item):
        name, thunk = item
        lhs, rhs = thunk()
        # Compare as matrices M[out, in].
        return compare(name, np.swapaxes(lhs, 2, 3), np.swapaxes(rhs, 2, 3), 2)

    for failure in parallel_map(run, equations, workers):
        if failure is not None:
            report.failures.append(failure)
    report.checked = len(equations) * m.base.dim ** 2
    return report


def semidirect_ldend(m: Bimodule, force: bool = False) -> MultiAlgebra:
    """A ⋉ V with (x+u)▷(y+v) = x▷y + l▷(x)v + r▷(y)u, likewise for ◁."""
    if m.shape is not BimoduleShape.LDEND:
        raise ArityError(f"{m.label} is not an L-dendriform bimodule")
    if not force:
        report = check_bimodule(m)
        if not report.holds:
            raise PreconditionError(f"{m.label} is not a bimodule", report)
    n, k = m.base.dim, m.module_dim
    total = n + k
    ops = {}
    for op, left, right in (("tri_r", "l_tri_r", "r_tri_r"), ("tri_l", "l_tri_l", "r_tri_l")):
        arr = zeros((total, total, total))
        arr[:n, :n, :n] = m.base.op(op).coeffs
        arr[:n, n:, n:] = m.action(left)
        arr[n:, :n, n:] = np.swapaxes(m.action(right), 0, 1)
        ops[op] = OpTensor(arr)
    return MultiAlgebra(total, ops, Kind.L_DENDRIFORM, f"{m.base.label} ⋉ {m.label}")


# --- O-operators ---


def _act_through(T: np.ndarray, a: np.ndarray) -> np.ndarray:
    """W[u, v, o]: the action of T(e_u) applied to e_v."""
    return np.tensordot(T, a, axes=([0], [0]))


def _pull_back(T: np.ndarray, c: np.ndarray) -> np.ndarray:
    """P[u, v, k]: T(e_u) op T(e_v)."""
    half = np.tensordot(T, c, axes=([0], [0]))
    return np.transpose(np.tensordot(half, T, axes=([1], [0])), (0, 2, 1))


def _push(T: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Apply T to the last axis of w."""
    return np.tensordot(w, T, axes=([2], [1]))


def _o_operator_equations(op: OOperator) -> list[tuple[str, np.ndarray, np.ndarray]]:
    T = op.T.entries
    m = op.context
    if m.shape is BimoduleShape.LIE:
        W = _act_through(T, m.action("rho"))
        lhs = _pull_back(T, m.base.op("bracket").coeffs)
        return [("bracket", lhs, _push(T, W - swap_pair(W)))]
    if m.shape is BimoduleShape.PRELIE:
        inner = _act_through(T, m.action("l")) + swap_pair(_act_through(T, m.action("r")))
        return [("circ", _pull_back(T, m.base.op("circ").coeffs), _push(T, inner))]
    equations = []
    for op_name, left, right in (("tri_r", "l_tri_r", "r_tri_r"), ("tri_l", "l_tri_l", "r_tri_l")):
        inner = _act_through(T, m.action(left)) + swap_pair(_act_through(T, m.action(right)))
        equations.append((op_name, _pull_back(T, m.base.op(op_name).coeffs), _push(T, inner)))
    return equations


def check_o_operator(op: OOperator, workers: int = 1) -> VerificationReport:
    """T(u) * T(v) = T(l(T(u))v + r(T(v))u) for each product, on all module basis pairs."""
    report = VerificationReport(f"T on {op.context.label}", f"{op.context.shape.value} O-operator")
    n, k = op.context.base.dim, op.context.module_dim
    if n == 0 or k == 0:
        return report
    equations = _o_operator_equations(op)
    report.checks = [name for name, _, _ in equations]
    results = parallel_map(lambda eq: compare(eq[0], eq[1], eq[2], 2, basis="v"), equations, workers)
    report.failures = [f for f in results if f is not None]
    report.checked = len(equations) * k ** 2
    return report


def o_operator_holds(op: OOperator) -> bool:
    """Yes/no form of check_o_operator, without witnesses."""
    if op.context.base.dim == 0 or op.context.module_dim == 0:
        return True
    return all(bool(np.all(lhs == rhs)) for _, lhs, rhs in _o_operator_equations(op))


def check_rota_baxter(alg: MultiAlgebra, R: LinearMap, workers: int = 1) -> VerificationReport:
    """Weight-zero Rota-Baxter condition: the O-operator condition for the regular context."""
    if R.rows != alg.dim or R.cols != alg.dim:
        raise DimensionError(f"R must be {alg.dim}x{alg.dim}, got {R.rows}x{R.cols}")
    report = check_o_operator(OOperator(R, regular_bimodule(alg)), workers)
    report.subject = f"R on {alg.label}"
    report.system = "Rota-Baxter"
    for i, failure in enumerate(report.failures):
        report.failures[i] = Failure(failure.check, failure.indices, failure.lhs, failure.rhs, "e")
    return report


def _require_o_operator(op: OOperator, force: bool) -> None:
    if force:
        return
    report = check_o_operator(op)
    if not report.holds:
        raise PreconditionError("T is not an O-operator", report)


def _induced_tensors(op: OOperator) -> dict[str, np.ndarray]:
    T = op.T.entries
    m = op.context
    k = m.module_dim
    if m.base.dim == 0:
        through = {name: zeros((k, k, k)) for name in m.shape.action_names}
    else:
        through = {name: _act_through(T, m.action(name)) for name in m.shape.action_names}
    if m.shape is BimoduleShape.LIE:
        return {"circ": through["rho"]}
    if m.shape is BimoduleShape.PRELIE:
        return {"tri_r": through["l"], "tri_l": -through["r"]}
    return {
        "se": through["l_tri_r"],
        "ne": through["l_tri_l"],
        "nw": -through["r_tri_r"],
        "sw": -through["r_tri_l"],
    }


def induce(op: OOperator, force: bool = False) -> MultiAlgebra:
    """The structure one level up the tower on the module space V."""
    _require_o_operator(op, force)
    m = op.context
    tensors = _induced_tensors(op)
    kind = INDUCED_KIND[m.shape]
    return MultiAlgebra(m.module_dim, {name: OpTensor(t) for name, t in tensors.items()}, kind,
                        f"induced from T on {m.label}")


def induce_on_image(op: OOperator, force: bool = False) -> ImageAlgebra:
    """Transport the induced structure to T(V), after checking it is well defined."""
    _require_o_operator(op, force)
    m = op.context
    n = m.base.dim
    kind = INDUCED_KIND[m.shape]
    rank = op.T.rank()
    if rank == 0:
        return ImageAlgebra(MultiAlgebra.zero(kind, 0, "image of T"), LinearMap.zeros(n, 0))

    T = op.T.entries
    tensors = _induced_tensors(op)
    matrix = to_sympy(T)

    failures = []
    for w_index, kernel_vector in enumerate(matrix.nullspace()):
        w = from_sympy(kernel_vector)[:, 0]
        for name, D in tensors.items():
            left = _apply_rows(T, np.tensordot(w, D, axes=([0], [0])))
            right = _apply_rows(T, np.tensordot(w, D, axes=([0], [1])))
            for side, values in (("kernel first", left), ("kernel second", right)):
                check = f"{name} well-defined ({side}, kernel vector {w_index + 1})"
                failure = compare(check, values, zeros(values.shape), 1, basis="v")
                if failure is not None:
                    failures.append(failure)
    if failures:
        report = VerificationReport("image of T", "well-definedness", failures)
        raise PreconditionError("Induced products do not descend to the image", report)

    echelon, pivots = matrix.T.rref()
    basis = [echelon.row(i).T for i in range(rank)]
    preimages = []
    for b in basis:
        solution, params = matrix.gauss_jordan_solve(b)
        solution = solution.subs({p: 0 for p in params})
        preimages.append(from_sympy(solution)[:, 0])

    ops = {}
    for name, D in tensors.items():
        arr = zeros((rank, rank, rank))
        for i, u in enumerate(preimages):
            for j, v in enumerate(preimages):
                product = np.tensordot(np.tensordot(u, D, axes=([0], [0])), v, axes=([0], [0]))
                image = T.dot(product)
                for c, pivot in enumerate(pivots):
                    arr[i, j, c] = image[pivot]
        ops[name] = OpTensor(arr)
    inclusion = LinearMap(np.stack([from_sympy(b)[:, 0] for b in basis], axis=1), "T(V)", "A")
    return ImageAlgebra(MultiAlgebra(rank, ops, kind, "image of T"), inclusion)


def _apply_rows(T: np.ndarray, rows: np.ndarray) -> np.ndarray:
    """Apply T to each row vector of `rows` (shape [v, o]) giving [v, k]."""
    return np.tensordot(rows, T, axes=([1], [1]))


# --- Rota-Baxter towers ---


def rb_tower(alg: MultiAlgebra, Rs: Sequence[LinearMap], workers: int = 1) -> MultiAlgebra:
    """Lift through one, two or three weight-zero Rota-Baxter operators, Rs[0] first.

    Each R must be Rota-Baxter on `alg` and the family must commute pairwise.
    """
    if not Rs:
        raise ArityError("rb_tower needs at least one operator")
    levels = {BimoduleShape.LIE: 3, BimoduleShape.PRELIE: 2, BimoduleShape.LDEND: 1}
    shape = shape_of(alg)
    if len(Rs) > levels[shape]:
        raise ArityError(f"A {shape.value} algebra lifts through at most {levels[shape]} operators")
    for i, R in enumerate(Rs):
        report = check_rota_baxter(alg, R, workers)
        if not report.holds:
            raise PreconditionError(f"R{i + 1} is not a Rota-Baxter operator", report)
    for i in range(len(Rs)):
        for j in range(i + 1, len(Rs)):
            if not Rs[i].commutes_with(Rs[j]):
                raise PreconditionError(f"R{i + 1} and R{j + 1} do not commute")

    current = alg
    for i, R in enumerate(Rs):
        context = regular_bimodule(current)
        report = check_o_operator(OOperator(R, context), workers)
        if not report.holds:
            raise PreconditionError(f"R{i + 1} is not Rota-Baxter on the lifted structure", report)
        current = induce(OOperator(R, context), force=True)
        logger.debug("rb_tower step %d: %s", i + 1, current.kind.value)
    return current.with_kind(current.kind, f"rb_tower({alg.name})" if alg.name else "")


# --- Characterizations ---


def lquadri_equivalence(alg: MultiAlgebra, workers: int = 1) -> dict[str, bool]:
    """The four-product family is an L-quadri-algebra iff its horizontal pair is
    L-dendriform and (L↘, -L↖, L↗, -L↙) is a bimodule of it."""
    horizontal = lquadri_to_ldend(alg, "horizontal")
    return {
        "l-quadri": verify(alg, builtin_system(Kind.L_QUADRI), workers).holds,
        "horizontal l-dendriform": verify(horizontal, builtin_system(Kind.L_DENDRIFORM), workers).holds,
        "bimodule": check_bimodule(lquadri_bimodule(alg, "horizontal"), workers).holds,
    }
