"""Axiom systems as data, and exhaustive verification over basis triples."""

from __future__ import annotations

import functools
import json
import logging
import re
from fractions import Fraction
from pathlib import Path
from typing import Any

import numpy as np

from algebra import compare, nest_left, nest_right, parallel_map, parse_recipe, resolve_derived
from errors import AlgebraError, ArityError, UnknownKindError
from models import (
    AxiomSystem,
    Identity,
    Kind,
    MultiAlgebra,
    OpTensor,
    Term,
    VerificationReport,
    to_fraction,
    zeros,
)

logger = logging.getLogger(__name__)

AXIOMS_PATH = Path(__file__).parent / "data" / "axioms.json"
AXIOMS_FORMAT_VERSION = 1
VARIABLES = ("x", "y", "z")


# --- Identity parsing ---


_TOKEN = re.compile(r"\d+/\d+|\d+|[()+\-*]|[A-Za-z_]\w*|\S")


class _TermParser:
    def __init__(self, text: str, context: str):
        self.text = text
        self.context = context
        self.tokens = _TOKEN.findall(text)
        self.pos = 0

    def error(self, message: str) -> AlgebraError:
        return AlgebraError(f"{self.context}: {message} in '{self.text}'")

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        token = self.peek()
        if token is None:
            raise self.error("unexpected end of expression")
        self.pos += 1
        return token

    def expect(self, token: str) -> None:
        got = self.take()
        if got != token:
            raise self.error(f"expected '{token}', got '{got}'")

    def variable(self) -> str:
        token = self.take()
        if token not in VARIABLES:
            raise self.error(f"expected a variable, got '{token}'")
        return token

    def op_name(self) -> str:
        token = self.take()
        if token in VARIABLES or not re.fullmatch(r"[A-Za-z_]\w*", token):
            raise self.error(f"expected an operation name, got '{token}'")
        return token

    def operand(self) -> tuple[str, ...] | str:
        if self.peek() == "(":
            self.take()
            a = self.variable()
            op = self.op_name()
            b = self.variable()
            self.expect(")")
            return (a, op, b)
        return self.variable()

    def terms(self) -> tuple[Term, ...]:
        if self.tokens == ["0"]:
            return ()
        parsed = []
        while self.peek() is not None:
            sign = Fraction(1)
            if self.peek() in ("+", "-"):
                sign = Fraction(-1) if self.take() == "-" else sign
            elif parsed:
                raise self.error("missing '+' or '-' between terms")
            if self.peek() and re.fullmatch(r"\d+(/\d+)?", self.peek()):
                sign *= to_fraction(self.take())
                if self.peek() == "*":
                    self.take()
            parsed.append(self.term(sign))
        return tuple(parsed)

    def term(self, coeff: Fraction) -> Term:
        left = self.operand()
        outer = self.op_name()
        right = self.operand()
        if isinstance(left, tuple) and isinstance(right, tuple):
            raise self.error("terms may nest only one product")
        if isinstance(left, tuple):
            a, inner, b = left
            return Term(coeff, outer, (a, b, right), inner, "left")
        if isinstance(right, tuple):
            b, inner, c = right
            return Term(coeff, outer, (left, b, c), inner, "right")
        return Term(coeff, outer, (left, right))


def parse_side(text: str, context: str = "identity") -> tuple[Term, ...]:
    return _TermParser(text, context).terms()


def _parse_identity(raw: dict[str, Any], system: str) -> tuple[Identity, bool]:
    name = raw["name"]
    context = f"{system}/{name}"
    identity = Identity(name, parse_side(raw["lhs"], context), parse_side(raw.get("rhs", "0"), context))
    variables = identity.variables
    for term in identity.lhs + identity.rhs:
        if tuple(sorted(term.variables)) != variables:
            raise AlgebraError(f"{context}: term '{term}' does not use each of {', '.join(variables)} once")
    return identity, bool(raw.get("merge", False))


# --- Built-in systems ---


@functools.lru_cache(maxsize=1)
def _load_tables() -> dict[str, Any]:
    with open(AXIOMS_PATH) as f:
        data = json.load(f)
    version = data.get("format_version")
    if version != AXIOMS_FORMAT_VERSION:
        raise AlgebraError(f"{AXIOMS_PATH.name}: unsupported format version {version}")
    return data["systems"]


def _strong_form(weak: AxiomSystem, merged: set[str], kind: Kind) -> AxiomSystem:
    """Every side of every identity must vanish. Sides listed in `merged` are
    swap-images of each other, so only the left one is kept."""
    identities = []
    for identity in weak.identities:
        identities.append(Identity(f"{identity.name}.lhs", identity.lhs, (), strong_form=True))
        if identity.name not in merged:
            identities.append(Identity(f"{identity.name}.rhs", identity.rhs, (), strong_form=True))
    return AxiomSystem(kind, weak.ops, tuple(identities), dict(weak.derived_ops), dict(weak.directions))


@functools.lru_cache(maxsize=None)
def _build(kind: Kind) -> tuple[AxiomSystem, frozenset[str]]:
    tables = _load_tables()
    if kind.value not in tables:
        raise UnknownKindError(f"No axiom system for '{kind.value}'")
    raw = tables[kind.value]
    if "strong_of" in raw:
        weak, merged = _build(Kind.parse(raw["strong_of"]))
        return _strong_form(weak, set(merged), kind), merged
    parsed = [_parse_identity(item, kind.value) for item in raw["identities"]]
    system = AxiomSystem(
        kind=kind,
        ops=tuple(raw["ops"]),
        identities=tuple(identity for identity, _ in parsed),
        derived_ops=dict(raw.get("derived", {})),
        directions=dict(raw.get("directions", {})),
        version=AXIOMS_FORMAT_VERSION,
    )
    known = set(system.ops) | set(system.derived_ops)
    for identity in system.identities:
        unknown = identity.op_names - known
        if unknown:
            raise AlgebraError(f"{kind.value}/{identity.name}: undefined operations {sorted(unknown)}")
    merged = frozenset(identity.name for identity, merge in parsed if merge)
    return system, merged


def builtin_system(tag: Kind | str) -> AxiomSystem:
    """The hard-coded axiom system of a structure class."""
    kind = Kind.parse(tag)
    if kind is Kind.RAW:
        raise UnknownKindError("Raw algebras have no axiom system")
    system, _ = _build(kind)
    logger.debug("Loaded %s system with %d identities", kind.value, len(system.identities))
    return system


def merged_sides(tag: Kind | str) -> frozenset[str]:
    """Identities whose two sides coincide under x <-> y (one side kept in strong form)."""
    return _build(Kind.parse(tag))[1]


# --- Evaluation ---


def term_tensor(term: Term, namespace: dict[str, OpTensor], variables: tuple[str, ...]) -> np.ndarray:
    """Values of one term on all basis tuples, axes ordered as `variables` then output."""
    outer = namespace[term.outer].coeffs
    if term.nested == "right":
        raw = nest_right(outer, namespace[term.inner].coeffs)
    elif term.nested == "left":
        raw = nest_left(outer, namespace[term.inner].coeffs)
    else:
        raw = outer
    axes = [term.variables.index(v) for v in variables] + [len(variables)]
    return np.transpose(raw, axes) * term.coeff


def side_tensor(terms: tuple[Term, ...], namespace: dict[str, OpTensor], variables: tuple[str, ...], dim: int) -> np.ndarray:
    total = zeros((dim,) * (len(variables) + 1))
    for term in terms:
        total = total + term_tensor(term, namespace, variables)
    return total


def _check_arity(alg: MultiAlgebra, system: AxiomSystem) -> None:
    if set(alg.op_names) != set(system.ops):
        raise ArityError(
            f"{alg.label} has operations {', '.join(alg.op_names) or 'none'}; "
            f"the {system.name} system needs {', '.join(system.ops)}"
        )


def verify(alg: MultiAlgebra, system: AxiomSystem, workers: int = 1) -> VerificationReport:
    """Decide every identity on all ordered basis triples; first witness per identity."""
    _check_arity(alg, system)
    report = VerificationReport(alg.label, system.name, checks=[i.name for i in system.identities])
    if alg.dim == 0:
        return report
    namespace = resolve_derived(alg, system.derived_ops)

    def check(identity: Identity):
        variables = identity.variables
        lhs = side_tensor(identity.lhs, namespace, variables, alg.dim)
        rhs = side_tensor(identity.rhs, namespace, variables, alg.dim)
        return compare(identity.name, lhs, rhs, len(variables)), alg.dim ** len(variables)

    results = parallel_map(check, system.identities, workers)
    for failure, count in results:
        report.checked += count
        if failure is not None:
            report.failures.append(failure)
    logger.debug("%s vs %s: %d evaluations, %d failing identities",
                 alg.label, system.name, report.checked, len(report.failures))
    return report


def verify_kind(alg: MultiAlgebra, workers: int = 1) -> VerificationReport:
    """Verify against the system of the declared kind."""
    if alg.kind is Kind.RAW:
        raise UnknownKindError(f"{alg.label} is raw; pass a structure class to verify against")
    return verify(alg, builtin_system(alg.kind), workers)


def matching_kinds(alg: MultiAlgebra) -> list[Kind]:
    """Every structure class whose operation names match the algebra's."""
    return [k for k in Kind if k is not Kind.RAW and set(k.op_names) == set(alg.op_names)]


# --- Direction audit ---


def derived_directions(system: AxiomSystem) -> dict[str, str]:
    """Directions of primary and sum-type derived operations; '*' where summands disagree."""
    directions = dict(system.directions)
    for name, recipe in system.derived_ops.items():
        terms = parse_recipe(recipe)
        if not terms or any(t.swapped or t.coeff != 1 or t.op not in directions for t in terms):
            continue
        parts = [directions[t.op] for t in terms]
        directions[name] = "".join(
            letters[0] if len(set(letters)) == 1 else "*" for letters in zip(*parts)
        )
    return directions


def _dominant(term: Term, axis: int, directions: dict[str, str]) -> set[str]:
    outer = directions[term.outer][axis]
    if term.nested == "right":
        a, b, c = term.variables
        inner = directions[term.inner][axis]
        found = {a} if outer in "L*" else set()
        if outer in "R*":
            found |= {c} if inner == "R" else {b} if inner == "L" else {b, c}
        return found
    if term.nested == "left":
        a, b, c = term.variables
        inner = directions[term.inner][axis]
        found = {c} if outer in "R*" else set()
        if outer in "L*":
            found |= {b} if inner == "R" else {a} if inner == "L" else {a, b}
        return found
    a, b = term.variables
    return {b} if outer == "R" else {a} if outer == "L" else {a, b}


def audit_directions(system: AxiomSystem) -> list[str]:
    """Structural audit of a table: along each direction, every term of an identity
    must be dominated by the same single variable."""
    directions = derived_directions(system)
    if not system.directions:
        return []
    axes = len(next(iter(system.directions.values())))
    problems = []
    for identity in system.identities:
        terms = identity.lhs + identity.rhs
        if any(op not in directions for t in terms for op in t.op_names):
            problems.append(f"{identity.name}: operations without directions")
            continue
        for axis in range(axes):
            seen = [_dominant(t, axis, directions) for t in terms]
            if any(len(s) != 1 for s in seen) or len(set().union(*seen)) != 1:
                dominant = ", ".join("".join(sorted(s)) for s in seen)
                problems.append(f"{identity.name}: direction {axis + 1} dominated by [{dominant}]")
    return problems
