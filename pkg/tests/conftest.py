"""
Pytest configuration for the fermion-sums test suite
"""
import os
import pytest
import sys
from pathlib import Path

# Add the parent directory to the path to import src
ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(ROOT))

from src.config import config_manager, reload_config
from src.core_alg import LaurentPoly
from src.suites import SuiteBounds

DEFAULT_CONFIG = str(ROOT / "config" / "fermion.json")


@pytest.fixture(autouse=True)
def default_config(monkeypatch):
    """Every test starts from the shipped configuration without FERMION_ overrides"""
    for key in list(os.environ):
        if key.startswith("FERMION_"):
            monkeypatch.delenv(key, raising=False)
    config_manager.config_file = DEFAULT_CONFIG
    reload_config()
    yield config_manager
    config_manager.config_file = DEFAULT_CONFIG
    reload_config()


@pytest.fixture
def small_bounds():
    """Suite bounds small enough for unit tests"""
    return SuiteBounds(
        max_weight=3,
        max_parts=3,
        max_rectangles=2,
        max_area=3,
        brute_force_max_weight=2,
    )


@pytest.fixture
def poly():
    """Build a LaurentPoly from its coefficients in ascending degree"""
    def build(*coefficients, low=0):
        return LaurentPoly({low + i: c for i, c in enumerate(coefficients)})
    return build


@pytest.fixture
def example_word():
    """Word of weight (5,3,2,3) used for the word statistics"""
    return tuple(int(ch) for ch in "2411213144321")


@pytest.fixture
def picture_tabloid():
    """Tabloid with rows of lengths 4,4,3,3 and weight (3,7,4)"""
    from src.stats import Tabloid
    return Tabloid.from_rows([[1, 2, 1, 2], [2, 2, 1, 3], [3, 2, 2], [3, 2, 3]])
