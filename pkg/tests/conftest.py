from pathlib import Path

import pytest

from gcdec.fileio import read_config

CONFIGS = Path(__file__).resolve().parents[1] / "configs"


def load(name):
    return read_config(CONFIGS / f"{name}.cfg").build()


@pytest.fixture(scope="session")
def tiny():
    """Two RS rows over GF(8), 7-bit inner code, designed distance 10."""
    return load("tiny_classic")[0]


@pytest.fixture(scope="session")
def grouped():
    """Two RS(7,3,5) rows decoded as one interleaved group, designed distance 20."""
    return load("grouped_l2")


@pytest.fixture(scope="session")
def configs_dir():
    return CONFIGS
