import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from homcat.cosimplicial import finset_cosimplicial, load_cosimplicial, sset_cosimplicial
from homcat.fincat import FinSet, TableCategory
from homcat.sset import TruncSimplicialSet, TruncSSetCategory, free_completion

DATA = Path(__file__).resolve().parents[1] / "src" / "homcat" / "data"
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def sset_F():
    C = TruncSSetCategory(3)
    return sset_cosimplicial(C)


@pytest.fixture(scope="session")
def finset_F():
    return finset_cosimplicial(FinSet(3), 2)


@pytest.fixture(scope="session")
def lattice_F():
    C = TableCategory.load(DATA / "lattice.json")
    return load_cosimplicial(C, DATA / "lattice_cosimplicial.json")


@pytest.fixture(scope="session")
def fold_F():
    C = TableCategory.load(DATA / "fold.json")
    return load_cosimplicial(C, DATA / "fold_cosimplicial.json")


def load_surface(name: str, level: int = 3) -> TruncSimplicialSet:
    return free_completion(TruncSimplicialSet.load(DATA / f"{name}.json"), level)


@pytest.fixture(scope="session")
def torus():
    return load_surface("torus")


@pytest.fixture(scope="session")
def klein():
    return load_surface("klein")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
