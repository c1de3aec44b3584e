from fractions import Fraction

import pytest

from seqasym import catalog


@pytest.fixture
def tournaments1():
    return catalog.tournaments(1)


@pytest.fixture
def permutations1():
    return catalog.permutations(1)


def rationals(max_num: int = 20, max_den: int = 12):
    """Hypothesis strategy for small exact rationals."""
    from hypothesis import strategies as st

    return st.fractions(
        min_value=Fraction(-max_num), max_value=Fraction(max_num), max_denominator=max_den
    )
