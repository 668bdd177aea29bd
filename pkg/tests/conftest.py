import os

import pytest

REPO_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


@pytest.fixture(scope="session", autouse=True)
def shared_action_cache():
    """Point the action-matrix cache at the repo-local directory so expensive
    diagram evaluations are shared across test runs."""
    os.environ.setdefault("SKEINLAB_CACHE", os.path.join(REPO_ROOT, ".skeinlab_cache"))
    yield
