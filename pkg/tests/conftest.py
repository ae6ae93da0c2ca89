import pytest

from qnest.stabilizer import CodeFragment, validate

FIVE_A_ROWS = ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]
FIVE_B_ROWS = ["XIZZY", "ZXIZX", "ZZYIY", "IZZYX"]


@pytest.fixture
def five_a():
    return validate(CodeFragment.from_rows(FIVE_A_ROWS))


@pytest.fixture
def five_b():
    return validate(CodeFragment.from_rows(FIVE_B_ROWS))


@pytest.fixture
def repetition3():
    return validate(CodeFragment.from_rows(["ZZI", "IZZ"]))
