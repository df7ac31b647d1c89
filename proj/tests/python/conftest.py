import pathlib

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture
def fixtures():
    return ROOT / "tests" / "fixtures"


@pytest.fixture
def schema():
    import json

    return json.loads((ROOT / "docs" / "report.schema.json").read_text())
