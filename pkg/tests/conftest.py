import pytest


def pytest_addoption(parser):
    parser.addoption("--large", action="store_true", default=False, help="run the slow sizes (n = 5 MacNeille, n = 6 KL)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--large"):
        return
    skip = pytest.mark.skip(reason="needs --large")
    for item in items:
        if "large" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session", autouse=True)
def kl_cache(tmp_path_factory):
    """Keep KL cache files out of the working tree."""
    path = tmp_path_factory.mktemp("klcache")
    mp = pytest.MonkeyPatch()
    mp.setenv("ASMV_CACHE_DIR", str(path))
    yield path
    mp.undo()
