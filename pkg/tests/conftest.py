import mpmath as mp
import pytest
from fractions import Fraction

from oscint.coefficients import A_WEIGHTS, CoefficientSet, MethodId, classical_coefficients


@pytest.fixture(scope="session")
def classical_mp():
    """Classical weight set with 320-bit mpf b-values (for extended-precision
    phase-lag evaluations)."""
    cl = classical_coefficients()
    with mp.workprec(320):
        b = tuple(mp.mpf(x.numerator) / x.denominator for x in cl.b)
    return CoefficientSet(method=MethodId.CLASSICAL, v=0.0, a=A_WEIGHTS, b=b,
                          precision_bits_used=320)


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running verification sweeps")
