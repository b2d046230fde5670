"""Shared fixtures: named semigroups and the small enumerated corpora"""

import pytest

from shared.enumeration import DedupMode, corpus
from shared.semigroup_core import (
    cyclic_group,
    direct_product,
    elementary_abelian_2,
    left_zero,
    monogenic,
    right_zero,
    zero_semigroup,
)


@pytest.fixture(scope='session')
def corpus3():
    """Orders 1..3 up to iso and anti-iso (1 + 4 + 18 tables)"""
    return corpus(3, DedupMode.UP_TO_ISO_AND_ANTI)


@pytest.fixture(scope='session')
def corpus4():
    """Orders 1..4 up to iso and anti-iso (1 + 4 + 18 + 126 tables)"""
    return corpus(4, DedupMode.UP_TO_ISO_AND_ANTI)


@pytest.fixture
def named():
    return {
        'M(2,3)': monogenic(2, 3),
        'C4': cyclic_group(4),
        'C5': cyclic_group(5),
        'V4': elementary_abelian_2(2),
        'L3': left_zero(3),
        'R3': right_zero(3),
        'Z3': zero_semigroup(3),
        'L2xC2': direct_product(left_zero(2), cyclic_group(2)),
    }


@pytest.fixture
def non_associative_file(tmp_path):
    """(0*0)*1 = 0 but 0*(0*1) = 1"""
    path = tmp_path / "broken.txt"
    path.write_text("2\n1 0\n0 0\n")
    return path
