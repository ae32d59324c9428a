import pytest

from treedim.tree_core import LeafSet

# branching pattern of the 3^5 example: LTD_3 = 1, MTD_3 = 2, TD_3 = 3
FIG3_LEAVES = [
    "00000", "00010", "00011", "00100", "00110", "00111", "00200", "00210", "00211",
    "10000", "10010", "10011", "11000", "11010", "11011", "12000", "12010", "12011",
    "20000", "20010", "20011", "20100", "20110", "20111", "20200", "20210", "20211",
]


@pytest.fixture
def fig1():
    return LeafSet.from_strings(["000", "010", "100", "101"])


@pytest.fixture
def fig3():
    return LeafSet.from_strings(FIG3_LEAVES, m=3)
