import os
import pytest
from unittest.mock import patch

from pisotcs.client.config import reset


@pytest.fixture(autouse=True)
def isolated_config():
    """
    Fixture that isolates every test from PISOTCS_* environment variables
    and from configuration changes made by other tests.
    """
    clean = {k: v for k, v in os.environ.items() if not k.startswith("PISOTCS_")}
    with patch.dict(os.environ, clean, clear=True):
        reset()
        yield
    reset()


@pytest.fixture(scope="session")
def golden_dir():
    """Directory holding reference outputs."""
    return os.path.join(os.path.dirname(__file__), "golden")
