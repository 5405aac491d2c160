import pytest

from mzvstar.numerics import PrecisionConfig, ZetaEvaluator


@pytest.fixture(scope="session")
def evaluator():
    """One evaluator for the whole session so the zeta cache stays warm."""
    return ZetaEvaluator(PrecisionConfig())
