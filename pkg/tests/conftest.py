import pytest


@pytest.fixture(autouse=True)
def _no_ambient_cache(monkeypatch):
    # Keep CLI runs hermetic regardless of the caller's environment.
    monkeypatch.delenv("BROUSSEAU_CACHE_DIR", raising=False)
