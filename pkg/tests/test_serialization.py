from __future__ import annotations

import json

import pytest

from bimodules import check_bimodule, regular_bimodule
from corpus import corpus_path, example_names, examples_of_kind, list_examples, load_example
from errors import FormatError
from models import Kind, LinearMap
from serialization import (
    AlgebraFile,
    ModuleBlock,
    load_algebra_file,
    parse_document,
    to_document,
    write_algebra_file,
)


def _doc(**overrides):
    data = {
        "format_version": 1,
        "kind": "lie",
        "dim": 2,
        "ops": {"bracket": [[["0", "0"], ["1", "0"]], [["-1", "0"], ["0", "0"]]]},
    }
    data.update(overrides)
    return data


@pytest.mark.parametrize("name", example_names())
def test_corpus_documents_reparse_to_the_same_file(name):
    af = load_example(name)
    again = parse_document(to_document(af))
    assert again.algebra == af.algebra
    assert again.maps == af.maps
    assert again.forms == af.forms
    assert again.tensors == af.tensors
    assert again.provenance == af.provenance


def test_minimal_document():
    af = parse_document(_doc())
    assert af.algebra.kind is Kind.LIE
    assert af.maps == {} and af.module is None


def test_integers_are_accepted_as_scalars():
    af = parse_document(_doc(ops={"bracket": [[[0, 0], [1, 0]], [[-1, 0], [0, 0]]]}))
    assert af.algebra == load_example("aff1").algebra


def test_unknown_field():
    with pytest.raises(FormatError) as info:
        parse_document(_doc(colour="blue"))
    assert info.value.errors == ["colour: unknown field"]


def test_missing_required_fields_are_all_reported():
    with pytest.raises(FormatError) as info:
        parse_document({"format_version": 1, "kind": "lie"})
    assert info.value.errors == ["dim: missing", "ops: missing"]


def test_missing_operation():
    with pytest.raises(FormatError) as info:
        parse_document(_doc(ops={}))
    assert info.value.errors[0].startswith("ops.bracket: missing")


def test_every_problem_in_the_ops_is_reported_at_once():
    data = _doc(kind="l-dendriform", dim=1, ops={"tri_r": [[[0.5]]], "circ": [[["1"]]]})
    with pytest.raises(FormatError) as info:
        parse_document(data, "bad.json")
    errors = info.value.errors
    assert any(e.startswith("ops.tri_r[0][0][0]: expected a rational string") for e in errors)
    assert any(e.startswith("ops.tri_l: missing") for e in errors)
    assert any(e.startswith("ops.circ: not an operation") for e in errors)
    assert str(info.value).startswith("bad.json: ")


@pytest.mark.parametrize("entry", [0.5, True, None, "1/0", "x"])
def test_inexact_or_malformed_scalars_are_rejected(entry):
    with pytest.raises(FormatError) as info:
        parse_document(_doc(dim=1, ops={"bracket": [[[entry]]]}))
    assert info.value.errors[0].startswith("ops.bracket[0][0][0]: ")


def test_wrong_shape():
    with pytest.raises(FormatError) as info:
        parse_document(_doc(ops={"bracket": [[["0", "0"]]]}))
    assert "expected a list of length 2, got length 1" in info.value.errors[0]


def test_unsupported_version():
    with pytest.raises(FormatError, match="unsupported version"):
        parse_document(_doc(format_version=2))


def test_unknown_kind():
    with pytest.raises(FormatError, match="kind: "):
        parse_document(_doc(kind="jordan"))


def test_form_of_the_wrong_size():
    with pytest.raises(FormatError, match=r"forms\.B: expected a 2x2 matrix"):
        parse_document(_doc(forms={"B": [["1"]]}))


def test_raw_documents_keep_any_operation_names():
    af = parse_document(_doc(kind="raw", dim=1, ops={"star": [[["1"]]], "dot": [[["0"]]]}))
    assert set(af.algebra.op_names) == {"star", "dot"}
    assert list(to_document(af)["ops"]) == ["dot", "star"]


def test_module_block_round_trip(tmp_path, aff1):
    m = regular_bimodule(aff1)
    path = tmp_path / "adjoint.json"
    write_algebra_file(AlgebraFile(aff1, module=ModuleBlock(m.shape, m.module_dim, m.actions, "adjoint")), path)
    af = load_algebra_file(path)
    assert af.module.name == "adjoint"
    assert check_bimodule(af.module.over(af.algebra)).holds


def test_module_block_with_a_foreign_action():
    module = {"shape": "lie", "dim": 1, "actions": {"rho": [[["0"]], [["0"]]], "l": [[["0"]], [["0"]]]}}
    with pytest.raises(FormatError, match="module.actions.l: not an action of a lie bimodule"):
        parse_document(_doc(module=module))


def test_write_then_load(tmp_path, example_file):
    af = example_file("nilpotent-lquadri-2")
    path = tmp_path / "out.json"
    write_algebra_file(af, path)
    assert not list(tmp_path.glob("*.tmp"))
    again = load_algebra_file(str(path))
    assert again.algebra == af.algebra
    assert again.get_map("stretch") == LinearMap.diagonal([2, 1])
    assert again.source == str(path)


def test_write_overwrites_in_place(tmp_path, aff1, heisenberg):
    path = tmp_path / "out.json"
    write_algebra_file(aff1, path)
    write_algebra_file(heisenberg, path)
    assert load_algebra_file(path).algebra.dim == 3


def test_broken_json_reports_the_position(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{\n  "format_version": 1,\n  "dim": 2\n  "kind": "lie"\n}\n')
    with pytest.raises(FormatError, match=r"line 4, column 3") as info:
        load_algebra_file(path)
    assert info.value.source == str(path)


def test_missing_file(tmp_path):
    with pytest.raises(FormatError):
        load_algebra_file(tmp_path / "nope.json")


def test_top_level_must_be_an_object(tmp_path):
    path = tmp_path / "list.json"
    path.write_text(json.dumps([1, 2]))
    with pytest.raises(FormatError, match="top level must be an object"):
        load_algebra_file(path)


def test_named_entries(example_file):
    af = example_file("aff1")
    assert af.get_map("R") == LinearMap([[0, 1], [0, 0]])
    with pytest.raises(FormatError, match="no map named 'S' \\(available: R, identity\\)"):
        af.get_map("S")
    with pytest.raises(FormatError, match="available: none"):
        af.get_form("B")


def test_corpus_prefix_loads_bundled_examples():
    assert load_algebra_file("corpus:heisenberg").algebra == load_example("heisenberg").algebra


def test_unknown_example():
    with pytest.raises(FormatError, match="no bundled example named 'nope'"):
        corpus_path("nope")
    with pytest.raises(FormatError):
        load_algebra_file("corpus:nope")


def test_listing_covers_every_kind():
    entries = list_examples()
    assert {e.name for e in entries} == set(example_names())
    assert {e.kind for e in entries} >= set(Kind) - {Kind.RAW}
    assert all(e.provenance for e in entries)


def test_examples_of_kind():
    found = examples_of_kind(Kind.L_QUADRI)
    assert set(found) == {"zero-lquadri-2", "heisenberg-lquadri", "nilpotent-lquadri-2"}
