from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from k3m20.veronese import (
    doubled_model_dims,
    quadrics_on_veronese2,
    scaled_quartic_dims,
    veronese_target_dim,
)


def test_veronese_target_dim_examples():
    assert veronese_target_dim(1, 2) == 2  # conic in the plane
    assert veronese_target_dim(2, 2) == 5
    assert veronese_target_dim(3, 2) == 9
    assert veronese_target_dim(5, 2) == 20
    assert veronese_target_dim(3, 3) == 19
    assert veronese_target_dim(3, 5) == 55
    with pytest.raises(ValueError):
        veronese_target_dim(0, 2)
    with pytest.raises(ValueError):
        veronese_target_dim(3, 0)


def test_quadrics_on_veronese2_examples():
    # P^2 -> P^5: quadrics on P^5 form a 21-dim space, quartics on P^2 a
    # 15-dim space, so 6 quadrics contain the image
    assert quadrics_on_veronese2(2) == 6
    # P^5 -> P^20: 231 - 126 = 105
    assert quadrics_on_veronese2(5) == 105
    assert quadrics_on_veronese2(1) == comb(4, 2) - comb(5, 4)
    with pytest.raises(ValueError):
        quadrics_on_veronese2(0)


@given(st.integers(min_value=1, max_value=300))
def test_quadrics_on_veronese2_is_never_negative(n):
    assert quadrics_on_veronese2(n) >= 0


def test_doubled_model_dims_worked_case():
    # the degree-8 model lives in P^5 with 3 quadrics through it; doubling
    # lands in P^17 after cutting those from the P^20 of the Veronese image
    assert doubled_model_dims(2) == (5, 20, 3, 17)
    assert doubled_model_dims(4) == (9, 54, 21, 33)
    assert doubled_model_dims(10) == (21, 252, 171, 81)


def test_doubled_model_dims_identity():
    for n in range(2, 1001):
        before, veronese, q, after = doubled_model_dims(n)
        assert before == 2 * n + 1
        assert veronese == 2 * n * n + 5 * n + 2
        assert veronese == comb(before + 2, 2) - 1
        assert q == 2 * n * n - 3 * n + 1
        assert after == 8 * n + 1


def test_doubled_model_dims_degree_four_has_no_quadrics():
    with pytest.raises(ValueError):
        doubled_model_dims(1)


def test_scaled_quartic_dims_worked_cases():
    # r = 3: P^19, one cubic-induced quartic, landing in P^19
    assert scaled_quartic_dims(3) == (19, 0, 19)
    assert scaled_quartic_dims(5) == (55, 4, 51)
    assert scaled_quartic_dims(4) == (34, 1, 33)


def test_scaled_quartic_dims_identity():
    for r in range(3, 1001):
        veronese, cut, after = scaled_quartic_dims(r)
        assert veronese == comb(r + 3, 3) - 1
        assert cut == comb(r - 1, 3)
        assert after == 2 * r * r + 1


def test_scaled_quartic_dims_guard():
    for r in (0, 1, 2):
        with pytest.raises(ValueError):
            scaled_quartic_dims(r)
