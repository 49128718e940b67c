import pytest

from incentive_games.matrix_games import CostTable


@pytest.fixture(scope="session")
def table_a() -> CostTable:
    """2x2 benchmark where asymmetric information hurts the principal."""
    return CostTable(
        cp=([[5.0, 5.0], [5.0, 1.0]], [[5.0, 1.0], [5.0, 5.0]]),
        ca=([[4.0, 3.0], [2.0, 3.0]], [[2.0, 3.0], [4.0, 2.0]]),
    )


@pytest.fixture(scope="session")
def table_b() -> CostTable:
    """2x2 benchmark where the agent gains by revealing information."""
    return CostTable(
        cp=([[4.95, 5.0], [5.0, 1.0]], [[5.0, 1.0], [5.0, 5.0]]),
        ca=([[2.0, 5.0], [1.0, 2.0]], [[3.0, 1.0], [1.0, 2.0]]),
    )
