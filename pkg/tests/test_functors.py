from __future__ import annotations

import pytest

from algebra import opposite
from axioms import verify_kind
from corpus import examples_of_kind
from errors import AlgebraError, ArityError
from functors import (
    SYMMETRIES,
    apply_functor,
    check_derived_identities,
    commutator_lie,
    functor,
    functor_aliases,
    functor_names,
    ldend_to_prelie,
    lquadri_to_ldend,
    lquadri_to_prelie,
    octo_project,
    reshufflings,
    subadjacent_lie,
    symmetry,
    transpose,
)
from models import Kind, MultiAlgebra, OpTensor

LQUADRI_NAMES = sorted(examples_of_kind(Kind.L_QUADRI, Kind.QUADRI))
OCTO_NAMES = sorted(examples_of_kind(Kind.L_OCTO, Kind.OCTO))


def test_nilpotent_horizontal_algebra(example):
    assert lquadri_to_ldend(example("nilpotent-lquadri-2"), "horizontal").same_ops(example("nilpotent-ldend-2"))


@pytest.mark.parametrize("name", LQUADRI_NAMES)
@pytest.mark.parametrize("flavor", ["horizontal", "vertical", "depth"])
def test_associated_ldend_algebras(example, name, flavor):
    ldend = lquadri_to_ldend(example(name), flavor)
    assert ldend.kind.weak is Kind.L_DENDRIFORM
    assert verify_kind(ldend).holds


@pytest.mark.parametrize("name", LQUADRI_NAMES)
def test_every_route_reaches_the_subadjacent_lie_algebra(example, name):
    alg = example(name)
    lie = subadjacent_lie(alg)
    assert verify_kind(lie).holds
    for flavor in ("horizontal", "vertical", "depth"):
        for prelie_flavor in ("horizontal", "vertical"):
            route = commutator_lie(ldend_to_prelie(lquadri_to_ldend(alg, flavor), prelie_flavor))
            assert route.same_ops(lie), (flavor, prelie_flavor)
    for flavor in ("circ", "star", "bullet"):
        prelie = lquadri_to_prelie(alg, flavor)
        assert verify_kind(prelie).holds
        assert commutator_lie(prelie).same_ops(lie), flavor


@pytest.mark.parametrize("name", LQUADRI_NAMES)
def test_reshufflings_stay_l_quadri(example, name):
    for shuffled_name, shuffled in reshufflings(example(name)).items():
        assert shuffled.kind is Kind.L_QUADRI or shuffled.kind is Kind.QUADRI
        assert verify_kind(shuffled.with_kind(Kind.L_QUADRI)).holds, shuffled_name


@pytest.mark.parametrize("name", LQUADRI_NAMES)
@pytest.mark.parametrize("functor_name", ["transpose"] + [f"sym_{s}" for s in SYMMETRIES])
def test_derived_operation_identities(example, name, functor_name):
    assert check_derived_identities(example(name), functor_name).holds


def test_transpose_is_an_involution(example):
    alg = example("heisenberg-lquadri")
    assert transpose(transpose(alg)).same_ops(alg)


def test_nilpotent_lquadri_is_fixed_by_reshufflings(nilpotent_lquadri):
    assert transpose(nilpotent_lquadri).same_ops(nilpotent_lquadri)
    for which in SYMMETRIES:
        assert symmetry(nilpotent_lquadri, which).same_ops(nilpotent_lquadri), which


def test_strong_input_gets_strong_target(example):
    quadri = example("quadri-nw-2")
    assert lquadri_to_ldend(quadri, "vertical").kind is Kind.DENDRIFORM
    assert lquadri_to_ldend(quadri, "horizontal").kind is Kind.L_DENDRIFORM
    assert lquadri_to_prelie(quadri, "star").kind is Kind.ASSOCIATIVE
    assert verify_kind(lquadri_to_prelie(quadri, "star")).holds
    assert ldend_to_prelie(example("dend-rb-2"), "horizontal").kind is Kind.ASSOCIATIVE


@pytest.mark.parametrize("name", OCTO_NAMES)
@pytest.mark.parametrize("which", ["depth", "vertical", "sum", "mixed"])
def test_octo_projections(example, name, which):
    assert verify_kind(octo_project(example(name), which).with_kind(Kind.L_QUADRI)).holds


def test_mixed_projection_of_a_single_product(example):
    source = example("octo-se2-2")
    image = octo_project(source, "mixed")
    assert image.op("se") == source.op("se2")
    assert all(image.op(name).is_zero for name in ("ne", "nw", "sw"))
    assert verify_kind(image.with_kind(Kind.L_QUADRI)).holds


# --- Degenerate patterns of an L-quadri-algebra ---

# e1 o e1 = 2 e1, e1 o e2 = e2: pre-Lie, with associator (e1, e1, e2) = e2
NONASSOC_PRELIE = OpTensor.from_entries(2, {(0, 0, 0): 2, (0, 1, 1): 1})


def _lquadri(dim: int, **ops: OpTensor) -> MultiAlgebra:
    zero = OpTensor.zeros(dim)
    return MultiAlgebra(dim, {name: ops.get(name, zero) for name in Kind.L_QUADRI.op_names}, Kind.L_QUADRI)


def test_prelie_product_in_one_slot_is_l_quadri(example):
    circ = example("heisenberg-prelie").op("circ")
    assert verify_kind(_lquadri(3, se=circ)).holds
    assert verify_kind(_lquadri(2, se=NONASSOC_PRELIE)).holds


@pytest.mark.parametrize("slot", ["ne", "nw", "sw"])
def test_associative_product_in_one_slot(example, slot):
    product = example("octo-se2-2").op("se2")
    alg = _lquadri(2, **{slot: product})
    assert verify_kind(alg).holds
    assert verify_kind(MultiAlgebra(2, {"circ": alg.op(slot)}, Kind.ASSOCIATIVE)).holds


@pytest.mark.parametrize("slot, identity", [("ne", "LQ2"), ("nw", "LQ3"), ("sw", "LQ5")])
def test_non_associative_product_in_one_slot_fails(slot, identity):
    assert verify_kind(_lquadri(2, **{slot: NONASSOC_PRELIE})).failed_checks == [identity]


@pytest.mark.parametrize("name", ["heisenberg-ldend", "dend-rb-2"])
@pytest.mark.parametrize("partner", ["nw", "ne", "sw"])
def test_l_dendriform_pairs(example, name, partner):
    # the two slots besides se and partner stay zero
    source = example(name)
    alg = _lquadri(source.dim, se=source.op("tri_r"), **{partner: source.op("tri_l")})
    assert verify_kind(alg).holds
    pair = MultiAlgebra(source.dim, {"tri_r": alg.op("se"), "tri_l": alg.op(partner)}, Kind.L_DENDRIFORM)
    assert verify_kind(pair).holds


@pytest.mark.parametrize("right", ["sw", "ne"])
def test_degenerate_dendriform_pairs(example, right):
    # se = ne = 0 gives (sw, nw); se = sw = 0 gives (ne, nw)
    source = example("dend-rb-2")
    alg = _lquadri(2, nw=source.op("tri_l"), **{right: source.op("tri_r")})
    assert verify_kind(alg).holds
    pair = MultiAlgebra(2, {"tri_r": alg.op(right), "tri_l": alg.op("nw")}, Kind.DENDRIFORM)
    assert verify_kind(pair).holds


def test_negated_and_opposite_dendriform_pair(example):
    # se = nw = 0: (-ne, opposite of sw) is dendriform
    source = example("dend-rb-2")
    alg = _lquadri(2, ne=-source.op("tri_r"), sw=opposite(source.op("tri_l")))
    assert verify_kind(alg).holds
    pair = MultiAlgebra(2, {"tri_r": -alg.op("ne"), "tri_l": opposite(alg.op("sw"))}, Kind.DENDRIFORM)
    assert verify_kind(pair).holds


def test_quadri_tag_on_an_l_quadri_only_algebra_names_the_failing_side():
    alg = _lquadri(2, se=NONASSOC_PRELIE)
    assert verify_kind(alg).holds
    report = verify_kind(alg.with_kind(Kind.QUADRI))
    assert not report.holds
    assert report.failed_checks == ["LQ1.lhs"]
    failure = report.failures[0]
    assert failure.indices == (0, 0, 1)
    # e1 o (e1 o e2) - (e1 o e1) o e2 = e2 - 2 e2
    assert failure.lhs == (0, -1)
    assert failure.rhs == (0, 0)


def test_aliases_resolve_to_canonical_recipes():
    aliases = functor_aliases()
    assert aliases["lquadri_to_assoc"] == "lquadri_to_prelie.star"
    assert functor("dend_to_assoc").name == "ldend_to_prelie.horizontal"
    assert set(aliases) <= set(functor_names(include_aliases=True))
    assert not set(aliases) & set(functor_names())


def test_unknown_functor_and_flavor(nilpotent_lquadri):
    with pytest.raises(AlgebraError):
        functor("lquadri_to_jordan")
    with pytest.raises(AlgebraError):
        lquadri_to_ldend(nilpotent_lquadri, "diagonal")
    with pytest.raises(AlgebraError):
        symmetry(nilpotent_lquadri, "e")


def test_functor_needs_source_operations(heisenberg):
    with pytest.raises(ArityError):
        apply_functor("transpose", heisenberg)
