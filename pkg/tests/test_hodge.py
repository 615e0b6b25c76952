import pytest
from hypothesis import given, strategies as st

from eisencomb.hodge import (
    HodgeSet,
    MiddleNonzero,
    hodge_set_of,
    middle_hodge_number,
    p_of_mu,
    tensor_hodge,
)
from eisencomb.weights import Weight, twist_by_det, validate

from strategies import valid_weights


def hs(weight, *pairs):
    return HodgeSet.from_counts(weight, {pq: 1 for pq in pairs})


def test_hodge_set_examples():
    assert hodge_set_of(validate(Weight([1, 0]))) == hs(2, (2, 0), (0, 2))
    assert hodge_set_of(validate(Weight([5]))) == hs(0, (0, 0))
    assert hodge_set_of(validate(Weight([2, 0, -2]))) == hs(6, (6, 0), (3, 3), (0, 6))


def test_tensor_examples():
    trivial = hs(0, (0, 0))
    h2 = hs(2, (2, 0), (0, 2))
    h6 = hs(6, (6, 0), (3, 3), (0, 6))
    assert tensor_hodge(h2, trivial) == h2
    assert tensor_hodge(h6, trivial) == h6
    assert tensor_hodge(h2, h6) == hs(8, (8, 0), (5, 3), (2, 6), (6, 2), (3, 5), (0, 8))


def test_tensor_collects_multiplicities():
    h4 = hs(4, (4, 0), (0, 4))
    h = tensor_hodge(h4, hs(4, (4, 0), (2, 2), (0, 4)))
    assert h.multiplicity(4, 4) == 2 and middle_hodge_number(h) == 2
    assert h.total == 6


def test_middle_number_examples():
    assert middle_hodge_number(hs(2, (2, 0), (0, 2))) == 0
    assert middle_hodge_number(hs(6, (6, 0), (3, 3), (0, 6))) == 1
    assert middle_hodge_number(hs(0, (0, 0))) == 1
    assert middle_hodge_number(hs(3, (3, 0), (0, 3))) == 0


def test_p_of_mu_examples():
    assert p_of_mu(hs(2, (2, 0), (0, 2))) == 2
    assert p_of_mu(hs(8, (8, 0), (5, 3), (3, 5), (0, 8))) == 5
    with pytest.raises(MiddleNonzero):
        p_of_mu(hs(6, (6, 0), (3, 3), (0, 6)))
    # odd total weight: the middle is not a lattice point
    assert p_of_mu(hs(3, (3, 0), (0, 3))) == 3


def test_json_round_trip():
    h = hs(8, (8, 0), (5, 3), (3, 5), (0, 8))
    assert HodgeSet.from_json(h.to_json()) == h
    assert h.to_json()["pairs"][0] == {"p": 8, "q": 0, "mult": 1}


@given(valid_weights(), valid_weights())
def test_symmetry_and_totals(lam, lam_prime):
    h, h2 = hodge_set_of(validate(lam)), hodge_set_of(validate(lam_prime))
    assert h.is_symmetric() and h.total == lam.n
    t = tensor_hodge(h, h2)
    assert t.is_symmetric()
    assert t.total == h.total * h2.total == lam.n * lam_prime.n
    if middle_hodge_number(t) == 0:
        p = p_of_mu(t)
        assert t.weight < 2 * p <= 2 * t.weight


@given(valid_weights(), st.integers(-30, 30))
def test_twist_invariance(lam, l):
    assert hodge_set_of(validate(twist_by_det(lam, l))) == hodge_set_of(validate(lam))
