import sys
from pathlib import Path

import pytest

# Add the repository root so tests import services.*, models.*, workflow.* directly
sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from services.coefficient_cache import coefficient_cache  # noqa: E402


@pytest.fixture
def fresh_cache():
    """Start a test with an empty coefficient cache"""
    coefficient_cache.clear()
    yield coefficient_cache
    coefficient_cache.clear()
