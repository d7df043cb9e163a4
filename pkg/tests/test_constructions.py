from __future__ import annotations

import pytest

from axioms import verify_kind
from bimodules import (
    check_o_operator,
    check_rota_baxter,
    dual_bimodule,
    induce_on_image,
    rb_tower,
    regular_bimodule,
)
from constructions import (
    commuting_families,
    lift_via_cocycle,
    rb_closed_forms,
    search_rb,
    search_space_size,
    symmetry_variants_of_rb_lquadri,
)
from errors import PreconditionError, SearchCapError, SingularError
from functors import lquadri_to_ldend
from models import BilinearForm, Kind, LinearMap, OOperator, OpTensor
from yang_baxter import (
    NW_SIGN_PROOF,
    check_invariant_ldend_companions,
    check_invariant_lquadri,
    r_from_form,
)

J = BilinearForm([[0, 1], [-1, 0]])


def test_search_space_size():
    assert search_space_size(2) == 81
    assert search_space_size(3, diagonal=True) == 27
    assert search_space_size(2, entries=[0, "0", 1]) == 16


def test_search_on_aff1(aff1):
    found = search_rb(aff1)
    assert len(found) == 15
    assert found[0].is_zero
    assert found[1] == LinearMap([[-1, -1], [1, 1]])
    assert LinearMap([[0, 1], [0, 0]]) in found
    assert all(check_rota_baxter(aff1, R).holds for R in found)


def test_search_is_independent_of_workers(aff1):
    assert search_rb(aff1, workers=4) == search_rb(aff1, workers=1)


def test_search_stops_early(aff1):
    assert search_rb(aff1, max_results=3) == search_rb(aff1)[:3]


def test_search_respects_cap(aff1):
    with pytest.raises(SearchCapError) as info:
        search_rb(aff1, cap=10)
    assert info.value.size == 81


def test_diagonal_search_on_heisenberg(heisenberg, heisenberg_R):
    found = search_rb(heisenberg, diagonal=True)
    assert len(found) == 7
    assert heisenberg_R in found


def test_commuting_diagonal_families_lift(heisenberg):
    found = search_rb(heisenberg, diagonal=True)
    families = commuting_families(found, 3)
    assert len(families) == 84
    for family in families:
        lifted = rb_tower(heisenberg, list(family))
        assert lifted.kind is Kind.L_QUADRI
        assert verify_kind(lifted).holds


def test_commuting_pairs_on_aff1_lift(aff1):
    for family in commuting_families(search_rb(aff1), 2):
        lifted = rb_tower(aff1, list(family))
        assert verify_kind(lifted).holds


def test_commuting_families_filter_noncommuting():
    a = LinearMap([[0, 1], [0, 0]])
    b = LinearMap.diagonal([1, 0])
    assert commuting_families([a, b], 2) == [(a, a), (b, b)]


def _assert_closed_forms_match(alg, R):
    via_functors = symmetry_variants_of_rb_lquadri(alg, R)
    closed = rb_closed_forms(alg, R)
    assert set(via_functors) == set(closed)
    for variant, lifted in via_functors.items():
        assert lifted.same_ops(closed[variant]), variant
        assert verify_kind(lifted).holds, variant


@pytest.mark.parametrize("name", ["nilpotent-ldend-2", "idempotent-ldend-2", "dend-rb-2"])
def test_closed_forms_match_reshuffled_lifts(example, name):
    alg = example(name)
    for R in search_rb(alg):
        _assert_closed_forms_match(alg, R)


def test_closed_forms_on_heisenberg_ldend(example, heisenberg_R):
    _assert_closed_forms_match(example("heisenberg-ldend"), heisenberg_R)


def test_reshuffled_lifts_need_rota_baxter(example):
    with pytest.raises(PreconditionError):
        symmetry_variants_of_rb_lquadri(example("idempotent-ldend-2"), LinearMap.identity(2))


def test_cocycle_lift_of_nilpotent_ldend(example, nilpotent_ldend, nilpotent_lquadri):
    lift = lift_via_cocycle(nilpotent_ldend, J)
    assert lift.lquadri.same_ops(nilpotent_lquadri)
    assert lift.depth.same_ops(nilpotent_ldend)
    assert lift.vertical.same_ops(nilpotent_ldend)
    assert lquadri_to_ldend(lift.lquadri, "horizontal").same_ops(nilpotent_ldend)
    assert lquadri_to_ldend(lift.lquadri, "depth").same_ops(lift.depth)
    assert lquadri_to_ldend(lift.lquadri, "vertical").same_ops(lift.vertical)
    assert check_invariant_lquadri(lift.lquadri, J).holds
    assert check_invariant_ldend_companions(lift.lquadri, J).holds


def _diagonal_lift_ops():
    return {
        "se": OpTensor.from_entries(2, {(0, 0, 0): 1, (1, 0, 1): 1}),
        "ne": OpTensor.from_entries(2, {(0, 1, 1): -1, (1, 0, 1): -1}),
        "nw": OpTensor.from_entries(2, {(0, 1, 1): 1, (1, 0, 1): 1}),
        "sw": OpTensor.from_entries(2, {(0, 1, 1): -1, (1, 0, 1): -1}),
    }


def test_cocycle_lift_with_all_four_products(example_file):
    af = example_file("diagonal-ldend-2")
    base, B = af.algebra, af.get_form("J")
    lift = lift_via_cocycle(base, B)
    assert lift.lquadri.ops == _diagonal_lift_ops()
    assert verify_kind(lift.lquadri).holds
    assert lquadri_to_ldend(lift.lquadri, "horizontal").same_ops(base)
    assert lift.depth.same_ops(base)
    assert lift.vertical.same_ops(base)
    assert lquadri_to_ldend(lift.lquadri, "depth").same_ops(lift.depth)
    assert lquadri_to_ldend(lift.lquadri, "vertical").same_ops(lift.vertical)
    assert check_invariant_lquadri(lift.lquadri, B).holds


@pytest.mark.parametrize("name", ["diagonal-ldend-2", "nilpotent-ldend-2"])
def test_flipped_nw_sign_loses_the_horizontal_algebra(example_file, name):
    af = example_file(name)
    base, B = af.algebra, af.get_form("J")
    flipped = lift_via_cocycle(base, B, NW_SIGN_PROOF).lquadri
    assert flipped.op("nw") == -lift_via_cocycle(base, B).lquadri.op("nw")
    assert not lquadri_to_ldend(flipped, "horizontal").same_ops(base)


@pytest.mark.parametrize("name", ["diagonal-ldend-2", "nilpotent-ldend-2"])
def test_operator_of_the_cocycle_transports_to_the_lift(example_file, name):
    # T: A* -> A with B(x, y) = <T^-1 x, y>
    af = example_file(name)
    base, B = af.algebra, af.get_form("J")
    T = r_from_form(B).as_map()
    assert T.is_invertible and T != LinearMap.identity(2)
    op = OOperator(T, dual_bimodule(regular_bimodule(base)))
    assert check_o_operator(op).holds
    image = induce_on_image(op)
    assert image.rank == 2
    assert image.inclusion == LinearMap.identity(2)
    assert image.algebra.same_ops(lift_via_cocycle(base, B).lquadri)
    assert lquadri_to_ldend(image.algebra, "horizontal").same_ops(base)


def test_cocycle_lift_preconditions(nilpotent_ldend, example):
    with pytest.raises(SingularError):
        lift_via_cocycle(nilpotent_ldend, BilinearForm.zeros(2))
    with pytest.raises(PreconditionError):
        lift_via_cocycle(nilpotent_ldend, BilinearForm([[1, 0], [0, 1]]))
    with pytest.raises(PreconditionError):
        lift_via_cocycle(example("idempotent-ldend-2"), J)
