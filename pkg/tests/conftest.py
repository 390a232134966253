"""
Pytest Configuration and Shared Fixtures - Unitary Cayley.

Global fixtures for all tests (unit, integration).
"""

import os
import sys
from collections.abc import Callable

import numpy as np
import pytest

# Set test environment variables BEFORE importing app code
os.environ.setdefault("UCG_ENVIRONMENT", "development")
os.environ.setdefault("UCG_LOG_LEVEL", "WARNING")

sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))

from src.cli import main as cli_main  # noqa: E402
from src.domain.models import ConnectionSet, DenseGraph  # noqa: E402
from src.services.graphs import (  # noqa: E402
    complete_connection_set,
    cycle_connection_set,
    materialize,
    unitary_graph,
)
from src.utils.logger import setup_logging  # noqa: E402


@pytest.fixture(autouse=True)
def quiet_logging() -> None:
    """Only warnings and errors reach stderr during tests."""
    setup_logging(debug=False, level="WARNING")


# ============================================================================
# Graph Fixtures
# ============================================================================

@pytest.fixture
def k3() -> DenseGraph:
    return materialize(complete_connection_set(3))


@pytest.fixture
def c6() -> DenseGraph:
    return materialize(cycle_connection_set(6))


@pytest.fixture
def c8() -> DenseGraph:
    """8-cycle: circulant but not integral."""
    return materialize(cycle_connection_set(8))


@pytest.fixture
def x_graph() -> Callable[[int], DenseGraph]:
    """Factory for the dense unitary Cayley graph X_n."""
    return unitary_graph


@pytest.fixture
def petersen() -> DenseGraph:
    """Petersen graph: strongly regular (10, 3, 0, 1), not circulant."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return DenseGraph.from_edges(10, outer + spokes + inner)


@pytest.fixture
def random_circulants() -> list[DenseGraph]:
    """50 seeded random symmetric circulants with 5 <= n <= 40."""
    rng = np.random.default_rng(20240611)
    graphs = []
    while len(graphs) < 50:
        n = int(rng.integers(5, 41))
        half = [s for s in range(1, n // 2 + 1) if rng.random() < 0.4]
        if not half:
            continue
        elems = frozenset(half) | frozenset(n - s for s in half)
        graphs.append(materialize(ConnectionSet(n=n, elems=elems)))
    return graphs


# ============================================================================
# CLI / API Fixtures
# ============================================================================

@pytest.fixture
def run_cli(capsys: pytest.CaptureFixture[str]) -> Callable[..., tuple[int, str, str]]:
    """Run the CLI in-process; returns (exit code, stdout, stderr)."""

    def _run(*argv: str) -> tuple[int, str, str]:
        code = cli_main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run


@pytest.fixture
def api_client():
    """FastAPI TestClient over the full application."""
    from fastapi.testclient import TestClient

    from src.main import app

    with TestClient(app) as client:
        yield client
