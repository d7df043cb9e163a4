from __future__ import annotations

import random

import pytest

from bimodules import lquadri_bimodule
from corpus import examples_of_kind
from errors import AlgebraError, PreconditionError, SingularError
from models import BilinearForm, Kind, LinearMap, OOperator, TensorPair
from yang_baxter import (
    canonical_r,
    central_extension,
    check_cocycle_ldend,
    check_cocycle_lquadri,
    check_cybe,
    check_invariant_lquadri,
    check_ld_equation,
    check_lq_equation,
    cybe_operator_bridge,
    extension_conditions,
    form_from_r,
    lift_operator_to_r,
    lq_equation_sides,
    o_operator_equivalence_suite,
    pairwise_product,
    r_from_form,
    tensor_form_bridge,
    transfer_under_symmetry,
)

LQUADRI_NAMES = sorted(examples_of_kind(Kind.L_QUADRI, Kind.QUADRI))


def _random_tensor(dim: int, seed: int) -> TensorPair:
    rng = random.Random(seed)
    return TensorPair([[rng.randint(-2, 2) for _ in range(dim)] for _ in range(dim)])


def test_pairwise_product_slot_patterns(heisenberg):
    # r = e1 (x) e2, s = e2 (x) e1: r12 [,] s13 = [e1, e2] (x) e2 (x) e1 = e3 (x) e2 (x) e1
    r = TensorPair([[0, 1, 0], [0, 0, 0], [0, 0, 0]])
    s = TensorPair([[0, 0, 0], [1, 0, 0], [0, 0, 0]])
    product = pairwise_product(heisenberg, r, s, "bracket", "12.13")
    nonzero = [(i, j, k) for i in range(3) for j in range(3) for k in range(3) if product[i, j, k] != 0]
    assert nonzero == [(2, 1, 0)]
    assert product[2, 1, 0] == 1
    with pytest.raises(AlgebraError):
        pairwise_product(heisenberg, r, s, "bracket", "21.13")


def test_cybe_on_aff1(aff1, example_file):
    r = example_file("aff1").get_tensor("r")
    assert check_cybe(aff1, r).holds
    assert cybe_operator_bridge(aff1, r) == {"cybe": True, "o-operator": True}
    with pytest.raises(PreconditionError):
        cybe_operator_bridge(aff1, TensorPair([[1, 0], [0, 0]]))


@pytest.mark.parametrize("seed", range(5))
def test_cybe_and_coadjoint_agree_on_heisenberg(heisenberg, seed):
    a = _random_tensor(3, seed)
    result = cybe_operator_bridge(heisenberg, a - a.swap())
    assert result["cybe"] == result["o-operator"]


@pytest.mark.parametrize("name", LQUADRI_NAMES)
@pytest.mark.parametrize("seed", range(3))
def test_lq_sum_is_the_sum_of_the_pair(example, name, seed):
    alg = example(name)
    sides = lq_equation_sides(alg, _random_tensor(alg.dim, seed))
    for side in (0, 1):
        total = sides["LQ-tri_r"][side] + sides["LQ-tri_l"][side]
        assert (total == sides["LQ-sum"][side]).all()


def test_equivalence_suite_on_heisenberg_lquadri(example_file):
    af = example_file("heisenberg-lquadri")
    alg = af.algebra
    zero = o_operator_equivalence_suite(alg, TensorPair.zeros(3))
    assert zero.conditions == {"horizontal": True, "vertical": True, "depth": True, "lq-equation": True}
    assert o_operator_equivalence_suite(alg, af.get_tensor("symmetric")).conditions == zero.conditions
    failing = o_operator_equivalence_suite(alg, af.get_tensor("identity"))
    assert failing.agree
    assert not any(failing.conditions.values())
    with pytest.raises(PreconditionError):
        o_operator_equivalence_suite(alg, TensorPair([[0, 1, 0], [-1, 0, 0], [0, 0, 0]]))


@pytest.mark.parametrize("name", LQUADRI_NAMES)
@pytest.mark.parametrize("seed", range(4))
def test_equivalence_suite_agrees_on_random_symmetric_r(example, name, seed):
    alg = example(name)
    a = _random_tensor(alg.dim, seed)
    suite = o_operator_equivalence_suite(alg, a + a.swap())
    assert suite.agree, suite.conditions


def test_skew_bridge(example_file):
    nilpotent = example_file("nilpotent-ldend-2")
    assert tensor_form_bridge(nilpotent.algebra, nilpotent.get_tensor("J")) == {"equation": True, "form": True}
    idempotent = example_file("idempotent-ldend-2")
    assert tensor_form_bridge(idempotent.algebra, idempotent.get_tensor("J")) == {"equation": False, "form": False}


def test_symmetric_bridge(example, example_file):
    af = example_file("nilpotent-lquadri-2")
    assert tensor_form_bridge(af.algebra, af.get_tensor("identity")) == {"equation": False, "form": False}
    zero = example("zero-lquadri-2")
    assert tensor_form_bridge(zero, TensorPair([[1, 0], [0, 1]])) == {"equation": True, "form": True}


def test_bridge_preconditions(nilpotent_ldend):
    with pytest.raises(SingularError):
        tensor_form_bridge(nilpotent_ldend, TensorPair.zeros(2))
    with pytest.raises(PreconditionError):
        tensor_form_bridge(nilpotent_ldend, TensorPair([[1, 1], [0, 1]]))


def test_form_and_tensor_are_inverse():
    B = BilinearForm([[0, 2], [-2, 0]])
    assert form_from_r(r_from_form(B)) == B
    with pytest.raises(SingularError):
        r_from_form(BilinearForm.zeros(2))


def test_cocycle_conditions(example_file, nilpotent_ldend, nilpotent_lquadri):
    J = example_file("nilpotent-ldend-2").get_form("J")
    assert check_cocycle_ldend(nilpotent_ldend, J).holds
    with pytest.raises(PreconditionError):
        check_cocycle_ldend(nilpotent_ldend, BilinearForm([[1, 0], [0, 1]]))
    with pytest.raises(PreconditionError):
        check_cocycle_lquadri(nilpotent_lquadri, J)
    assert check_cocycle_lquadri(nilpotent_lquadri, BilinearForm.zeros(2)).holds


def test_invariance_on_nilpotent_lquadri(nilpotent_lquadri, example_file):
    J = example_file("nilpotent-lquadri-2").get_form("J")
    reports = transfer_under_symmetry(nilpotent_lquadri, J)
    assert set(reports) == {"identity", "transpose", "sym_a", "sym_b", "sym_c", "sym_d"}
    assert all(report.holds for report in reports.values())


def test_invariance_fails_everywhere_on_heisenberg_lquadri(example_file):
    af = example_file("heisenberg-lquadri")
    reports = transfer_under_symmetry(af.algebra, af.get_form("skew"))
    assert not any(report.holds for report in reports.values())
    assert not check_invariant_lquadri(af.algebra, af.get_form("skew")).holds
    with pytest.raises(AlgebraError):
        transfer_under_symmetry(af.algebra, af.get_form("skew"), mode="metric")


def test_lifted_operator_solves_ld_equation(nilpotent_lquadri):
    context = lquadri_bimodule(nilpotent_lquadri, "horizontal")
    ambient, r = lift_operator_to_r(OOperator(LinearMap.identity(2), context))
    assert ambient.dim == 4
    assert r.is_skew
    assert check_ld_equation(ambient, r).holds
    ambient, r = lift_operator_to_r(OOperator(LinearMap.diagonal([2, 1]), context))
    assert not check_ld_equation(ambient, r).holds


@pytest.mark.parametrize("name", LQUADRI_NAMES)
def test_canonical_r(example, name):
    alg = example(name)
    solution = canonical_r(alg)
    assert set(solution.ambients) == {"horizontal", "vertical", "depth"}
    assert solution.r.is_skew
    assert form_from_r(solution.r) == solution.form
    for flavor, ambient in solution.ambients.items():
        assert ambient.dim == 2 * alg.dim
        assert check_ld_equation(ambient, solution.r).holds, flavor
        assert check_cocycle_ldend(ambient, solution.form).holds, flavor


def test_canonical_r_needs_lquadri(broken_lquadri):
    with pytest.raises(PreconditionError):
        canonical_r(broken_lquadri)


def test_central_extension(example_file):
    af = example_file("nilpotent-lquadri-2")
    alg = af.algebra
    good = central_extension(alg, af.get_form("extension"))
    assert good.algebra.dim == 3
    assert good.lquadri.holds and good.conditions.holds
    assert set(good.omega) == {"vertical", "depth"}
    assert all(report.holds for report in good.omega.values())

    bad = central_extension(alg, af.get_form("extension_violating"))
    assert not bad.lquadri.holds
    assert not bad.conditions.holds
    assert bad.consistent
    assert bad.omega == {}

    assert central_extension(alg, BilinearForm.zeros(2)).lquadri.holds


@pytest.mark.parametrize("b12,b21,b22,holds", [
    (0, 0, 0, True),
    (-2, 1, 0, True),
    (4, -2, 0, True),
    (1, 1, 0, False),
    (0, 0, 1, False),
])
def test_extension_conditions_on_nilpotent_lquadri(nilpotent_lquadri, b12, b21, b22, holds):
    B = BilinearForm([[5, b12], [b21, b22]])
    assert extension_conditions(nilpotent_lquadri, B).holds is holds
    assert central_extension(nilpotent_lquadri, B).lquadri.holds is holds


def test_lq_equation_needs_four_products(heisenberg):
    with pytest.raises(AlgebraError):
        check_lq_equation(heisenberg, TensorPair.zeros(3))
