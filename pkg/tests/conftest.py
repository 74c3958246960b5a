import pytest

from invseq import bijections


@pytest.fixture(autouse=True)
def debug_checks(monkeypatch):
    # re-validate every intermediate sequence Gamma produces
    monkeypatch.setattr(bijections, "DEBUG_CHECKS", True)
