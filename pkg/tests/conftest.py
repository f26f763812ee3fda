"""Shared fixtures: path setup and corpus diagrams."""
import sys
from pathlib import Path

import pytest

# Add project root and src/ to path
PROJECT_ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(PROJECT_ROOT / "src"))
sys.path.insert(0, str(PROJECT_ROOT))

from singular_knots import CORPUS, load_diagram  # noqa: E402


@pytest.fixture(scope="session")
def corpus():
    return {name: entry.diagram() for name, entry in CORPUS.items()}


@pytest.fixture
def trefoil():
    return load_diagram("corpus:trefoil")


@pytest.fixture
def sing_kink():
    return load_diagram("corpus:sing-kink")


@pytest.fixture
def torus33sing():
    return load_diagram("corpus:torus33sing")


@pytest.fixture
def trefoil_sing3():
    return load_diagram("corpus:trefoil-sing3")
