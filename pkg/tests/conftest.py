import pytest

from minvenn.builder import build_venn_dual
from minvenn.doubling import double


@pytest.fixture(scope="session")
def dual8():
    return build_venn_dual(3)


@pytest.fixture(scope="session")
def dual16():
    return build_venn_dual(4)


@pytest.fixture(scope="session")
def doubling_chain(dual8):
    graphs = {8: dual8[0]}
    g = dual8[0]
    for n in range(9, 16):
        g = double(g)
        graphs[n] = g
    return graphs
