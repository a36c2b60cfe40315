from __future__ import annotations

import json
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def frozen() -> dict:
    return json.loads((DATA / "frozen.json").read_text())
