"""Shared fixtures: bundled examples and a few small hand-built algebras."""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

import io

import pytest
from rich.console import Console

from config import AppConfig
from corpus import load_example
from models import Kind, LinearMap, MultiAlgebra, OpTensor


@pytest.fixture
def example():
    """Load a bundled example's algebra by name."""
    def _load(name: str) -> MultiAlgebra:
        return load_example(name).algebra
    return _load


@pytest.fixture
def example_file():
    return load_example


@pytest.fixture
def heisenberg():
    return load_example("heisenberg").algebra


@pytest.fixture
def aff1():
    return load_example("aff1").algebra


@pytest.fixture
def nilpotent_ldend():
    return load_example("nilpotent-ldend-2").algebra


@pytest.fixture
def nilpotent_lquadri():
    return load_example("nilpotent-lquadri-2").algebra


@pytest.fixture
def heisenberg_R():
    return LinearMap.diagonal([1, 0, 0])


@pytest.fixture
def broken_lquadri():
    """One-dimensional e se e = e, e ne e = e: not an L-quadri-algebra."""
    one = OpTensor.from_entries(1, {(0, 0, 0): 1})
    return MultiAlgebra(1, {"se": one, "ne": one, "nw": OpTensor.zeros(1), "sw": OpTensor.zeros(1)},
                        Kind.L_QUADRI, "broken")


@pytest.fixture
def cli():
    """Run the command line in-process; returns (exit code, captured stdout)."""
    def _run(*argv: str) -> tuple[int, str]:
        from cli.app import run

        buffer = io.StringIO()
        console = Console(file=buffer, width=200, color_system=None)
        code = run(list(argv), AppConfig(workers=1), console)
        return code, buffer.getvalue()
    return _run
