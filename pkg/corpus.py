"""Bundled example algebras with provenance notes."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path

from errors import FormatError
from models import Kind, MultiAlgebra
from serialization import AlgebraFile, parse_document

logger = logging.getLogger(__name__)

CORPUS_DIR = Path(__file__).parent / "corpus"

# Zero algebras are generated rather than stored.
ZERO_EXAMPLES: dict[str, Kind] = {
    "zero-lie-2": Kind.LIE,
    "zero-prelie-2": Kind.PRELIE,
    "zero-assoc-2": Kind.ASSOCIATIVE,
    "zero-dend-2": Kind.DENDRIFORM,
    "zero-ldend-2": Kind.L_DENDRIFORM,
    "zero-quadri-2": Kind.QUADRI,
    "zero-lquadri-2": Kind.L_QUADRI,
    "zero-octo-2": Kind.OCTO,
    "zero-locto-2": Kind.L_OCTO,
}


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    kind: Kind
    dim: int
    provenance: str


def _stored_names() -> list[str]:
    return sorted(p.stem for p in CORPUS_DIR.glob("*.json"))


def example_names() -> list[str]:
    return list(ZERO_EXAMPLES) + _stored_names()


def corpus_path(name: str) -> Path:
    path = CORPUS_DIR / f"{name}.json"
    if not path.exists():
        raise FormatError(f"no bundled example named '{name}' (available: {', '.join(example_names())})",
                          f"corpus:{name}")
    return path


def load_example(name: str) -> AlgebraFile:
    if name in ZERO_EXAMPLES:
        kind = ZERO_EXAMPLES[name]
        return AlgebraFile(
            MultiAlgebra.zero(kind, 2, name),
            provenance=f"All-zero {kind.value} algebra of dimension 2; every identity reads 0 = 0.",
            source=f"corpus:{name}",
        )
    path = corpus_path(name)
    try:
        with open(path) as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise FormatError(f"line {e.lineno}, column {e.colno}: {e.msg}", str(path)) from None
    return parse_document(data, f"corpus:{name}")


def list_examples() -> list[CorpusEntry]:
    entries = []
    for name in example_names():
        af = load_example(name)
        entries.append(CorpusEntry(name, af.algebra.kind, af.algebra.dim, af.provenance))
    logger.debug("Corpus holds %d examples", len(entries))
    return entries


def examples_of_kind(*kinds: Kind) -> dict[str, AlgebraFile]:
    """Every bundled example whose declared kind is one of `kinds`."""
    found = {}
    for name in example_names():
        af = load_example(name)
        if af.algebra.kind in kinds:
            found[name] = af
    return found
