import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from superschur import ScanConfig, generate_nilpotent


@pytest.fixture(scope="session")
def scan_instances():
    """The default deterministic F5 scan stream, generated once."""
    return list(generate_nilpotent(ScanConfig()))
