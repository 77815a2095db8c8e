from __future__ import annotations

import numpy as np
import pytest
from hypothesis import strategies as st

from boolfn import TruthTable


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(0x5EED)


@st.composite
def truth_tables(draw, min_n: int = 0, max_n: int = 8):
    """Strategy producing a TruthTable with n in [min_n, max_n]."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    bits = draw(st.integers(min_value=0, max_value=(1 << (1 << n)) - 1))
    return TruthTable(n, bits)
