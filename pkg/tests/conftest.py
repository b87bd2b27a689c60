from pathlib import Path

import pytest

from coxeter_descent.algebra.descent_algebra import DescentAlgebra
from coxeter_descent.core.coxeter_system import build_system
from coxeter_descent.utils.config import Settings

SMALL_CAP = 100_000


@pytest.fixture
def settings(tmp_path: Path) -> Settings:
    return Settings(
        enumeration_cap=SMALL_CAP,
        output_dir=tmp_path / "output",
        seed=0,
        debug=False,
    )


@pytest.fixture(scope="session")
def algebras():
    cache = {}

    def get(spec: str) -> DescentAlgebra:
        if spec not in cache:
            cache[spec] = DescentAlgebra(build_system(spec, enumeration_cap=SMALL_CAP))
        return cache[spec]

    return get
