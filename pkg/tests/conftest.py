import pathlib

import pytest

import mwclique as mw

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> pathlib.Path:
    return FIXTURES


@pytest.fixture(scope="session", autouse=True)
def warm_engine():
    """Compile the jitted kernels once so timed tests measure the search,
    not the compiler. cache=True makes later sessions cheap anyway."""
    with open(FIXTURES / "k3.clq") as fh:
        g = mw.parse_instance(fh)
    for mode in sorted(mw.MODES):
        mw.run_search(g, mw.SolverConfig(mode=mode, seed=1, max_steps=64))
    mw.run_search(g, mw.SolverConfig(mode="trsc", seed=1, max_steps=64,
                                     mark_store="sparse"))


@pytest.fixture(scope="session")
def example1():
    with open(FIXTURES / "example1.wclq") as fh:
        return mw.parse_instance(fh)


@pytest.fixture(scope="session")
def k3():
    with open(FIXTURES / "k3.clq") as fh:
        return mw.parse_instance(fh)
