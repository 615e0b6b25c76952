import itertools

import pytest
from hypothesis import given, strategies as st

from eisencomb.halfint import HalfInt
from eisencomb.weights import (
    NotDominant,
    NotHalfIntegral,
    NotRegular,
    NotSelfDual,
    ParityViolation,
    Weight,
    cuspidal_params,
    dual_weight,
    parse_weight,
    period_twist_exponent,
    rho,
    twist_by_det,
    validate,
    weight_from_params,
)

from strategies import valid_weights


@pytest.mark.parametrize(
    "n, expected",
    [(1, [0]), (2, [HalfInt(1), HalfInt(-1)]), (3, [1, 0, -1])],
)
def test_rho(n, expected):
    assert list(rho(n)) == expected
    assert sum(rho(n), HalfInt(0)) == 0


def test_cuspidal_params_examples():
    p = cuspidal_params(Weight([1, 0]))
    assert p.a == (2,) and p.d == HalfInt(1) and p.motivic_weight == 2
    # cross-check: lambda + rho = (3/2, -1/2) = a_1 * gamma_1 + d * det
    lam_rho = [HalfInt(2) + HalfInt(1), HalfInt(0) + HalfInt(-1)]
    assert lam_rho == [HalfInt(3), HalfInt(-1)]
    assert lam_rho[0] - lam_rho[1] == p.a[0]

    p = cuspidal_params(Weight([2, 0, -2]))
    assert p.a == (3, 3) and p.d == 0 and p.motivic_weight == 6

    with pytest.raises(NotRegular):
        cuspidal_params(Weight([0, 0, 0]))


def test_validate_examples():
    p = validate(Weight([1, 0]))
    assert p.d.twice == 1 and p.motivic_weight + 2 - 1 == 3
    p = validate(Weight([2, 0]))
    assert p.a == (3,) and p.d == 1 and p.d.twice == 2
    with pytest.raises(NotSelfDual):
        validate(Weight([1, 0, 0]))


def test_validate_reports_offending_index():
    with pytest.raises(NotDominant) as exc:
        validate(Weight([3, 1, 2]))
    assert exc.value.index == 1
    with pytest.raises(NotRegular) as exc:
        validate(Weight([3, 2, 2, 1]))
    assert exc.value.index == 1
    with pytest.raises(NotSelfDual) as exc:
        validate(Weight([4, 2, 1, 0]))
    assert exc.value.index == 1


def test_flags_and_global_errors():
    # not self-dual, checks off: mean 1/3 is then the first failure
    with pytest.raises(NotHalfIntegral):
        cuspidal_params(Weight([1, 0, 0]), self_dual=False, regular=False)
    # d = 1/2 but w + n - 1 = 8
    with pytest.raises(ParityViolation):
        cuspidal_params(Weight([2, 0, 0, 0]), self_dual=False, regular=False)


def test_gl1_convention():
    for c in range(-5, 6):
        p = validate(Weight([c]))
        assert p.a == () and p.motivic_weight == 0 and p.d == c


@pytest.mark.parametrize(
    "lam, l, expected",
    [((1, 0), 0, (1, 0)), ((1, 0), 1, (0, -1)), ((2, 0, -2), -2, (4, 2, 0))],
)
def test_twist_examples(lam, l, expected):
    assert twist_by_det(Weight(lam), l).entries == expected


def test_twist_moves_d():
    lam = Weight([2, 0, -2])
    assert validate(twist_by_det(lam, -2)).d == 2


@pytest.mark.parametrize("lam, expected", [((1, 0), (0, -1)), ((0,), (0,)), ((2, 0, -2), (2, 0, -2))])
def test_dual_examples(lam, expected):
    assert dual_weight(Weight(lam)).entries == expected


@pytest.mark.parametrize("l, sign", [(0, 1), (1, -1), (-3, -1)])
def test_period_twist_exponent(l, sign):
    assert period_twist_exponent(l) == sign


def test_parse_weight():
    assert parse_weight("[1,0]") == Weight([1, 0])
    assert parse_weight(" [ -2, 0 ,5] ") == Weight([-2, 0, 5])
    assert str(Weight([1, 0])) == "[1,0]"
    for bad in ["1,0", "[]", "[1,,0]", "[a]", "[1.5]"]:
        with pytest.raises(ValueError):
            parse_weight(bad)


def _self_dual(v):
    return len({v[i] + v[-1 - i] for i in range(len(v))}) == 1


def _regular_self_dual(n, bound):
    for v in itertools.combinations(range(bound, -bound - 1, -1), n):
        if _self_dual(v):
            yield Weight(v)


def test_parity_implied_exhaustive():
    seen = 0
    for n in range(1, 6):
        for lam in _regular_self_dual(n, 6):
            p = validate(lam)  # must not raise ParityViolation or NotHalfIntegral
            assert (p.d.twice - (p.motivic_weight + n - 1)) % 2 == 0
            seen += 1
    assert seen > 100


def test_round_trip_exhaustive():
    for n in range(1, 6):
        for lam in _regular_self_dual(n, 6):
            p = validate(lam)
            assert weight_from_params(p.a, p.d) == lam


@given(valid_weights(), st.integers(-50, 50), st.integers(-50, 50))
def test_twist_properties(lam, l1, l2):
    p = validate(lam)
    assert twist_by_det(twist_by_det(lam, l1), -l1) == lam
    q = validate(twist_by_det(lam, l1))
    assert q.a == p.a and q.d == p.d - l1
    assert period_twist_exponent(l1 + l2) == period_twist_exponent(l1) * period_twist_exponent(l2)


@given(valid_weights())
def test_dual_properties(lam):
    p = validate(lam)
    dual = dual_weight(lam)
    q = validate(dual)
    assert dual_weight(dual) == lam
    assert q.a == p.a and q.d == -p.d and q.motivic_weight == p.motivic_weight
