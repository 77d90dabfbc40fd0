import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from combinadics.binomial import binomial
from combinadics.codec import (
    Combinadic,
    compare,
    decode,
    encode,
    parse_combinadic,
    predecessor,
    successor,
    validate,
    zero_rep,
)
from combinadics.errors import (
    DegreeMismatch,
    EmptyRepresentation,
    InvalidDegree,
    NegativeValue,
    NotStrictlyDecreasing,
    PredecessorOfZero,
)

from oracles import all_decreasing, brute_force_encode, tuple_value


@pytest.mark.parametrize("r, expected", [(1, (0,)), (3, (2, 1, 0)), (5, (4, 3, 2, 1, 0))])
def test_zero_rep(r, expected):
    rep = zero_rep(r)
    assert rep.coeffs == expected
    assert decode(rep) == 0


def test_zero_rep_rejects_r_zero():
    with pytest.raises(InvalidDegree):
        zero_rep(0)


def test_validate():
    rep = validate((4, 3, 0))
    assert rep.r == 3
    assert validate(rep) is rep
    with pytest.raises(NotStrictlyDecreasing) as info:
        validate((3, 3, 0))
    assert info.value.index == 0
    assert "C_3=3" in str(info.value) and "C_2=3" in str(info.value)
    with pytest.raises(EmptyRepresentation):
        validate(())
    with pytest.raises(NegativeValue):
        validate((2, -1))


def test_not_strictly_decreasing_reports_first_pair():
    with pytest.raises(NotStrictlyDecreasing) as info:
        validate((9, 5, 6, 6))
    assert info.value.index == 1


def test_low_coefficients_allowed():
    # C_i < i is fine; the term is just zero
    assert decode(Combinadic((5, 1, 0))) == 10


@pytest.mark.parametrize("coeffs, value", [((2, 1, 0), 0), ((4, 3, 0), 7), ((5, 1, 0), 10)])
def test_decode_examples(coeffs, value):
    assert decode(Combinadic(coeffs)) == value


@pytest.mark.parametrize("m, r", [(0, 3), (7, 3), (10, 3)])
def test_encode_matches_brute_force(m, r):
    assert encode(m, r).coeffs == brute_force_encode(m, r, 11)


@pytest.mark.parametrize("m, r, expected", [(0, 3, (2, 1, 0)), (7, 3, (4, 3, 0)), (10, 3, (5, 1, 0))])
def test_encode_examples(m, r, expected):
    assert encode(m, r).coeffs == expected


def test_encode_rejects_bad_arguments():
    with pytest.raises(InvalidDegree):
        encode(5, 0)
    with pytest.raises(NegativeValue):
        encode(-1, 2)


def test_encode_r1_is_identity():
    for m in range(200):
        assert encode(m, 1).coeffs == (m,)


def test_roundtrip_small():
    for r in range(1, 6):
        for m in range(20001):
            assert decode(encode(m, r)) == m


def test_canonicality_exhaustive():
    for r in range(1, 5):
        for t in all_decreasing(r, 16):
            assert encode(tuple_value(t), r).coeffs == t


@given(st.integers(0, 10**60), st.integers(1, 40))
def test_greedy_bound_and_roundtrip(m, r):
    rep = encode(m, r)
    assert decode(rep) == m
    top = rep.coeffs[0]
    assert binomial(top, r) <= m < binomial(top + 1, r)


@given(st.integers(0, 10**40), st.integers(1, 30))
def test_successor_matches_encode(m, r):
    assert successor(encode(m, r)) == encode(m + 1, r)


@pytest.mark.parametrize(
    "before, after", [((2, 1, 0), (3, 1, 0)), ((4, 3, 0), (4, 3, 1)), ((4, 3, 2), (5, 1, 0))]
)
def test_successor_examples(before, after):
    assert successor(Combinadic(before)).coeffs == after
    assert predecessor(Combinadic(after)).coeffs == before


def test_successor_coherence_sweep():
    for r in range(1, 7):
        rep = encode(0, r)
        for m in range(5000):
            nxt = successor(rep)
            assert nxt == encode(m + 1, r)
            rep = nxt


def test_successor_from_zero_counts():
    for r in range(1, 5):
        rep = zero_rep(r)
        for k in range(1, 1001):
            rep = successor(rep)
            assert decode(rep) == k


def test_predecessor_of_zero():
    with pytest.raises(PredecessorOfZero):
        predecessor(Combinadic((2, 1, 0)))


@given(st.integers(1, 10**30), st.integers(1, 20))
def test_predecessor_inverts_successor(m, r):
    rep = encode(m, r)
    assert successor(predecessor(rep)) == rep


@pytest.mark.parametrize(
    "a, b, expected",
    [((2, 1, 0), (2, 1, 0), 0), ((4, 3, 0), (5, 1, 0), -1), ((3, 1, 0), (2, 1, 0), 1)],
)
def test_compare_examples(a, b, expected):
    assert compare(Combinadic(a), Combinadic(b)) == expected


def test_compare_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        compare(Combinadic((1, 0)), Combinadic((2, 1, 0)))


def test_compare_matches_value_order():
    for r in range(1, 5):
        reps = [encode(m, r) for m in range(0, 2001, 7)]
        values = [decode(x) for x in reps]
        for a, va in zip(reps, values):
            for b, vb in zip(reps, values):
                assert compare(a, b) == (va > vb) - (va < vb)


def test_text_form():
    rep = parse_combinadic("4,3,0")
    assert rep.coeffs == (4, 3, 0)
    assert str(rep) == "4,3,0"
    with pytest.raises(NotStrictlyDecreasing):
        parse_combinadic("3,3,0")
    with pytest.raises(EmptyRepresentation):
        parse_combinadic("")


def test_huge_values():
    m = 7**500
    for r in (1, 2, 3, 17, 100):
        rep = encode(m, r)
        assert decode(rep) == m
        assert successor(rep) == encode(m + 1, r)


@settings(max_examples=30, deadline=None)
@given(st.integers(10**700, 10**2000), st.integers(1, 8))
def test_encode_beyond_float_range(m, r):
    rep = encode(m, r)
    assert decode(rep) == m
    assert binomial(rep.coeffs[0], r) <= m < binomial(rep.coeffs[0] + 1, r)
