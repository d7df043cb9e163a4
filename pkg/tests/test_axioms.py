from __future__ import annotations

import pytest

from axioms import (
    audit_directions,
    builtin_system,
    matching_kinds,
    merged_sides,
    parse_side,
    verify,
    verify_kind,
)
from corpus import example_names, load_example
from errors import AlgebraError, ArityError, UnknownKindError
from models import Kind, MultiAlgebra, OpTensor

IDENTITY_COUNTS = {
    Kind.LIE: 2,
    Kind.PRELIE: 1,
    Kind.ASSOCIATIVE: 1,
    Kind.L_DENDRIFORM: 2,
    Kind.DENDRIFORM: 3,
    Kind.L_QUADRI: 5,
    Kind.QUADRI: 9,
    Kind.L_OCTO: 14,
    Kind.OCTO: 27,
}


@pytest.mark.parametrize("kind,count", IDENTITY_COUNTS.items())
def test_identity_counts(kind, count):
    assert len(builtin_system(kind).identities) == count


def test_identity_names():
    assert [i.name for i in builtin_system(Kind.L_QUADRI).identities] == ["LQ1", "LQ2", "LQ3", "LQ4", "LQ5"]
    assert [i.name for i in builtin_system(Kind.DENDRIFORM).identities] == ["LD1.lhs", "LD2.lhs", "LD2.rhs"]
    assert merged_sides(Kind.L_OCTO) == frozenset({"LO1"})


def test_raw_has_no_system():
    with pytest.raises(UnknownKindError):
        builtin_system(Kind.RAW)


@pytest.mark.parametrize("kind", [Kind.L_DENDRIFORM, Kind.L_QUADRI, Kind.L_OCTO])
def test_direction_tables_are_consistent(kind):
    assert audit_directions(builtin_system(kind)) == []


@pytest.mark.parametrize("kind", [k for k in Kind if k is not Kind.RAW])
@pytest.mark.parametrize("dim", [0, 1, 2])
def test_zero_algebras_satisfy_everything(kind, dim):
    report = verify_kind(MultiAlgebra.zero(kind, dim))
    assert report.holds
    assert report.checks == [i.name for i in builtin_system(kind).identities]


@pytest.mark.parametrize("name", example_names())
def test_bundled_examples_satisfy_their_declared_class(name):
    assert verify_kind(load_example(name).algebra).holds


@pytest.mark.parametrize("name", ["dend-rb-2", "quadri-nw-2", "octo-se2-2", "zero-assoc-2"])
def test_strong_classes_satisfy_their_l_counterparts(name):
    alg = load_example(name).algebra
    assert alg.kind.is_strong
    assert verify(alg, builtin_system(alg.kind.weak)).holds


def test_violating_four_product_family(broken_lquadri):
    report = verify_kind(broken_lquadri)
    assert not report.holds
    assert "LQ2" in report.failed_checks
    assert report.checked == 5


def test_heisenberg_lquadri_is_also_quadri(example):
    alg = example("heisenberg-lquadri")
    assert verify(alg, builtin_system(Kind.QUADRI)).holds


def test_one_sided_bracket_fails_only_antisymmetry(aff1):
    assert Kind.LIE in matching_kinds(aff1.with_kind(Kind.RAW))
    # [e1, e2] = e1 with [e2, e1] = 0: Jacobi still holds on every triple
    bad = MultiAlgebra(2, {"bracket": OpTensor.from_entries(2, {(0, 1, 0): 1})}, Kind.LIE)
    report = verify_kind(bad)
    assert report.failed_checks == ["antisymmetry"]
    assert report.failures[0].witness == "(e1, e2)"


def test_arity_mismatch(heisenberg):
    with pytest.raises(ArityError):
        verify(heisenberg, builtin_system(Kind.L_QUADRI))


def test_matching_kinds_for_four_products(nilpotent_lquadri):
    assert matching_kinds(nilpotent_lquadri) == [Kind.QUADRI, Kind.L_QUADRI]


def test_parse_side_rejects_deep_nesting():
    assert str(parse_side("x se (y nw z) - (x se y) nw z")[1]) == "-(x se y) nw z"
    with pytest.raises(AlgebraError):
        parse_side("x se (y nw (z ne x))")
