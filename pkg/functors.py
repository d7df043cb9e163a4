"""Derived structures: recipes that turn richer algebras into poorer ones, plus the
transpose and symmetry reshufflings of L-quadri-algebras."""

from __future__ import annotations

import functools
import json
import logging
from pathlib import Path
from typing import Any

from algebra import combine, compare, resolve_derived
from errors import AlgebraError, ArityError
from models import FunctorRecipe, Kind, MultiAlgebra, OpTensor, VerificationReport

logger = logging.getLogger(__name__)

FUNCTORS_PATH = Path(__file__).parent / "data" / "functors.json"
FUNCTORS_FORMAT_VERSION = 1

SYMMETRIES = ("a", "b", "c", "d")


@functools.lru_cache(maxsize=1)
def _load() -> dict[str, Any]:
    with open(FUNCTORS_PATH) as f:
        data = json.load(f)
    if data.get("format_version") != FUNCTORS_FORMAT_VERSION:
        raise AlgebraError(f"{FUNCTORS_PATH.name}: unsupported format version {data.get('format_version')}")
    return data


@functools.lru_cache(maxsize=None)
def functor(name: str) -> FunctorRecipe:
    """Look up a recipe by name or alias."""
    data = _load()
    table = data["functors"]
    name = data.get("aliases", {}).get(name, name)
    if name not in table:
        raise AlgebraError(f"Unknown functor '{name}' (known: {', '.join(functor_names())})")
    raw = table[name]
    return FunctorRecipe(
        name=name,
        source=Kind.parse(raw["source"]),
        target=Kind.parse(raw["target"]),
        recipes=dict(raw["ops"]),
        strong_target=Kind.parse(raw["strong_target"]) if raw.get("strong_target") else None,
        identities=dict(raw.get("identities", {})),
    )


def functor_names(include_aliases: bool = False) -> list[str]:
    data = _load()
    names = list(data["functors"])
    if include_aliases:
        names.extend(data.get("aliases", {}))
    return names


def functor_aliases() -> dict[str, str]:
    return dict(_load().get("aliases", {}))


def namespace(alg: MultiAlgebra, family: Kind) -> dict[str, OpTensor]:
    """Primary and derived operations of an algebra read as a member of `family`."""
    missing = set(family.op_names) - set(alg.op_names)
    if missing:
        raise ArityError(f"{alg.label} lacks operations {', '.join(sorted(missing))} of a {family.value} algebra")
    derived = _load()["namespaces"].get(family.value, {})
    return resolve_derived(alg, derived)


def apply_functor(recipe: FunctorRecipe | str, alg: MultiAlgebra) -> MultiAlgebra:
    """Apply recipes to the source namespace. The output kind is a claim, not a certificate."""
    if isinstance(recipe, str):
        recipe = functor(recipe)
    ops = namespace(alg, recipe.source)
    produced = {name: combine(ops, text, alg.dim) for name, text in recipe.recipes.items()}
    kind = recipe.target_for(alg.kind)
    name = f"{recipe.name}({alg.name})" if alg.name else ""
    logger.debug("Applied %s to %s -> %s", recipe.name, alg.label, kind.value)
    return MultiAlgebra(alg.dim, produced, kind, name)


def _flavored(prefix: str, flavor: str, allowed: tuple[str, ...]) -> str:
    if flavor not in allowed:
        raise AlgebraError(f"Unknown flavor '{flavor}' for {prefix} (expected one of: {', '.join(allowed)})")
    return f"{prefix}.{flavor}"


# --- Named functors ---


def commutator_lie(alg: MultiAlgebra) -> MultiAlgebra:
    return apply_functor("commutator_lie", alg)


def ldend_to_prelie(alg: MultiAlgebra, flavor: str) -> MultiAlgebra:
    return apply_functor(_flavored("ldend_to_prelie", flavor, ("horizontal", "vertical")), alg)


def lquadri_to_ldend(alg: MultiAlgebra, flavor: str) -> MultiAlgebra:
    return apply_functor(_flavored("lquadri_to_ldend", flavor, ("horizontal", "vertical", "depth")), alg)


def lquadri_to_prelie(alg: MultiAlgebra, flavor: str) -> MultiAlgebra:
    return apply_functor(_flavored("lquadri_to_prelie", flavor, ("circ", "star", "bullet")), alg)


def subadjacent_lie(alg: MultiAlgebra) -> MultiAlgebra:
    return apply_functor("subadjacent_lie", alg)


def transpose(alg: MultiAlgebra) -> MultiAlgebra:
    return apply_functor("transpose", alg)


def symmetry(alg: MultiAlgebra, which: str) -> MultiAlgebra:
    _flavored("sym", which, SYMMETRIES)
    return apply_functor(f"sym_{which}", alg)


def octo_project(alg: MultiAlgebra, which: str) -> MultiAlgebra:
    return apply_functor(_flavored("octo_project", which, ("depth", "vertical", "sum", "mixed")), alg)


def reshufflings(alg: MultiAlgebra) -> dict[str, MultiAlgebra]:
    """The algebra itself, its transpose and its four symmetries."""
    family = {"identity": alg, "transpose": transpose(alg)}
    for which in SYMMETRIES:
        family[f"sym_{which}"] = symmetry(alg, which)
    return family


def check_derived_identities(alg: MultiAlgebra, name: str) -> VerificationReport:
    """Compare derived operations of the reshuffled algebra with the stated
    combinations of the original's derived operations, on all basis pairs."""
    recipe = functor(name)
    report = VerificationReport(alg.label, f"{name} derived operations")
    if not recipe.identities:
        return report
    before = namespace(alg, recipe.source)
    after = namespace(apply_functor(recipe, alg), recipe.source)
    for op, text in recipe.identities.items():
        expected = combine(before, text, alg.dim)
        report.checks.append(f"{op}^{name}")
        report.checked += alg.dim ** 2
        failure = compare(f"{op}^{name} = {text}", after[op].coeffs, expected.coeffs, 2)
        if failure is not None:
            report.failures.append(failure)
    return report
