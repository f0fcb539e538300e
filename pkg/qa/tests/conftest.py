"""
Pytest fixtures for QA tests.
Small named graphs, dissections, and temp input files for the CLI. Log files are disabled so
tests never write under data/.
"""
import os
import sys
from pathlib import Path

# Before any src module is imported: env_manager reads these at import time.
os.environ.setdefault("BOP_LOG_TO_FILE", "false")
os.environ.setdefault("EF_MEMO_ENTRY_CAP", "2000000")

import pytest

# Project root and modules under test
PROJECT_ROOT = Path(__file__).resolve().parent.parent.parent
SCRIPTS = PROJECT_ROOT / "src"
if str(SCRIPTS) not in sys.path:
    sys.path.insert(0, str(SCRIPTS))

from bop import Dissection  # noqa: E402
from graph_core import Graph  # noqa: E402


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


@pytest.fixture
def c4_chord():
    """C4 plus the chord {0, 2}: two triangles."""
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def hexagon_split():
    """Hexagon cut into two quadrilaterals by the chord {0, 3}."""
    return Dissection(6, frozenset({(0, 3)}))


@pytest.fixture
def write_input(tmp_path):
    """Write text to a file under tmp_path and return its path as str."""
    def _write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write
