"""Generic-contract operations checked against native int arithmetic."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from giantnat import BIGNAT, BIJ, TREE, DomainError, EQ, GT, LT, view
from giantnat.bignat import oracle_bitsize

SMALL = 130
_HREPS = (BIGNAT, BIJ, TREE)


def ints_to(limit):
    return st.integers(min_value=0, max_value=limit)


# ----------------------------------------------------------------------
# recognizers and primitives
# ----------------------------------------------------------------------


def test_recognizers_partition_domain(rep):
    for k in range(200):
        x = rep.from_int(k)
        flags = (rep.is_e(x), rep.is_o(x), rep.is_i(x))
        assert sum(flags) == 1
        assert flags == (k == 0, k % 2 == 1, k > 0 and k % 2 == 0)


def test_digit_constructors_and_inverses(rep):
    for k in range(100):
        x = rep.from_int(k)
        assert rep.to_int(rep.o(x)) == 2 * k + 1
        assert rep.to_int(rep.i(x)) == 2 * k + 2
        assert rep.o_inv(rep.o(x)) == x
        assert rep.i_inv(rep.i(x)) == x


def test_destructor_misuse_raises(rep):
    with pytest.raises(DomainError):
        rep.o_inv(rep.e)
    with pytest.raises(DomainError):
        rep.i_inv(rep.e)
    with pytest.raises(DomainError):
        rep.o_inv(rep.from_int(4))
    with pytest.raises(DomainError):
        rep.i_inv(rep.from_int(5))


def test_homomorphism_round_trip(rep):
    for k in range(2048):
        assert rep.to_int(rep.from_int(k)) == k


# ----------------------------------------------------------------------
# successor / predecessor / streams
# ----------------------------------------------------------------------


def test_succ_pred_small_sweep(rep):
    for k in range(1000):
        x = rep.from_int(k)
        assert rep.to_int(rep.succ(x)) == k + 1
        assert rep.pred(rep.succ(x)) == x
        if k > 0:
            assert rep.to_int(rep.pred(x)) == k - 1
            assert rep.succ(rep.pred(x)) == x


def test_succ_41_pred_42(rep):
    assert rep.to_int(rep.succ(rep.from_int(41))) == 42
    assert rep.to_int(rep.pred(rep.from_int(42))) == 41


def test_succ_of_all_o_run(rep):
    # "ooo" is 7; adding one flips the run and carries into 8
    assert rep.to_int(rep.succ(rep.from_int(7))) == 8


def test_pred_of_zero_raises(rep):
    with pytest.raises(DomainError):
        rep.pred(rep.e)


@given(ints_to(1 << 60))
@settings(max_examples=200)
def test_succ_pred_inverse_hypothesis(k):
    for rep_ in _HREPS:
        x = rep_.from_int(k)
        assert rep_.pred(rep_.succ(x)) == x
        assert rep_.to_int(rep_.succ(x)) == k + 1


def test_all_from(rep):
    stream = rep.all_from(rep.e)
    assert [rep.to_int(next(stream)) for _ in range(5)] == [0, 1, 2, 3, 4]
    stream = rep.all_from(rep.from_int(5))
    assert [rep.to_int(next(stream)) for _ in range(3)] == [5, 6, 7]


def test_all_from_hundredth_element(rep):
    stream = rep.all_from(rep.e)
    for _ in range(100):
        next(stream)
    assert rep.to_int(next(stream)) == 100


# ----------------------------------------------------------------------
# arithmetic
# ----------------------------------------------------------------------


def test_add_sub_cmp_against_oracle(rep):
    vals = [rep.from_int(k) for k in range(SMALL)]
    for x in range(SMALL):
        for y in range(SMALL):
            assert rep.to_int(rep.add(vals[x], vals[y])) == x + y
            expected = LT if x < y else EQ if x == y else GT
            assert rep.cmp(vals[x], vals[y]) is expected
            if y <= x:
                assert rep.to_int(rep.sub(vals[x], vals[y])) == x - y


def test_add_identity_and_examples(rep):
    x = rep.from_int(37)
    assert rep.add(x, rep.e) == x
    assert rep.sub(x, rep.e) == x
    assert rep.to_int(rep.add(rep.from_int(1), rep.from_int(4))) == 5
    assert rep.to_int(rep.sub(rep.from_int(50), rep.from_int(8))) == 42


def test_sub_underflow_raises(rep):
    with pytest.raises(DomainError):
        rep.sub(rep.from_int(3), rep.from_int(4))
    with pytest.raises(DomainError):
        rep.sub(rep.e, rep.from_int(1))


def test_min2_max2(rep):
    a, b = rep.from_int(3), rep.from_int(4)
    assert rep.min2(a, b) == a
    assert rep.max2(a, b) == b
    assert rep.min2(a, a) == a


@given(ints_to(1 << 48), ints_to(1 << 48))
@settings(max_examples=150)
def test_add_sub_homomorphism_hypothesis(a, b):
    for rep_ in _HREPS:
        va, vb = rep_.from_int(a), rep_.from_int(b)
        assert rep_.to_int(rep_.add(va, vb)) == a + b
        lo, hi = (va, vb) if a <= b else (vb, va)
        assert rep_.to_int(rep_.sub(hi, lo)) == abs(a - b)


def test_mul_db_hf(rep):
    vals = [rep.from_int(k) for k in range(80)]
    for x in range(80):
        for y in range(80):
            assert rep.to_int(rep.mul(vals[x], vals[y])) == x * y
    assert rep.to_int(rep.mul(rep.from_int(10), rep.from_int(5))) == 50
    assert rep.mul(rep.from_int(9), rep.e) == rep.e
    assert rep.db(rep.e) == rep.e
    assert rep.to_int(rep.db(rep.from_int(5))) == 10
    assert rep.to_int(rep.hf(rep.from_int(10))) == 5


def test_hf_rejects_odd_and_zero(rep):
    with pytest.raises(DomainError):
        rep.hf(rep.from_int(5))
    with pytest.raises(DomainError):
        rep.hf(rep.e)


@given(ints_to(1 << 24), ints_to(1 << 24))
@settings(max_examples=100)
def test_mul_homomorphism_hypothesis(a, b):
    for rep_ in _HREPS:
        assert rep_.to_int(rep_.mul(rep_.from_int(a), rep_.from_int(b))) == a * b


def test_pow_exp2_leftshift(rep):
    for x in range(7):
        for y in range(6):
            assert rep.to_int(rep.pow(rep.from_int(x), rep.from_int(y))) == x**y
    assert rep.to_int(rep.pow(rep.from_int(3), rep.from_int(4))) == 81
    assert rep.to_int(rep.pow(rep.e, rep.e)) == 1
    assert rep.to_int(rep.pow(rep.from_int(7), rep.e)) == 1
    for x in range(13):
        assert rep.to_int(rep.exp2(rep.from_int(x))) == 2**x
        assert rep.exp2(rep.from_int(x)) == rep.pow(rep.from_int(2), rep.from_int(x))
    assert rep.to_int(rep.leftshift(rep.from_int(10), rep.from_int(1))) == 1024
    for a in range(13):
        for b in range(65):
            got = rep.leftshift(rep.from_int(a), rep.from_int(b))
            assert rep.to_int(got) == (1 << a) * b
            assert got == rep.mul(rep.exp2(rep.from_int(a)), rep.from_int(b))


def test_div_and_rem(rep):
    for x in range(90):
        for y in range(1, 90):
            q, r = rep.div_and_rem(rep.from_int(x), rep.from_int(y))
            assert (rep.to_int(q), rep.to_int(r)) == divmod(x, y)
    q, r = rep.div_and_rem(rep.from_int(50), rep.from_int(10))
    assert (rep.to_int(q), rep.to_int(r)) == (5, 0)
    q, r = rep.div_and_rem(rep.from_int(7), rep.from_int(3))
    assert (rep.to_int(q), rep.to_int(r)) == (2, 1)
    x = rep.from_int(123)
    assert rep.div_and_rem(x, rep.from_int(1)) == (x, rep.e)
    assert rep.to_int(rep.divide(rep.from_int(50), rep.from_int(10))) == 5
    assert rep.to_int(rep.remainder(rep.from_int(7), rep.from_int(3))) == 1


def test_division_by_zero_raises(rep):
    with pytest.raises(DomainError):
        rep.div_and_rem(rep.from_int(5), rep.e)


@given(ints_to(1 << 32), st.integers(min_value=1, max_value=1 << 32))
@settings(max_examples=75)
def test_div_homomorphism_hypothesis(a, b):
    for rep_ in _HREPS:
        q, r = rep_.div_and_rem(rep_.from_int(a), rep_.from_int(b))
        assert (rep_.to_int(q), rep_.to_int(r)) == divmod(a, b)


# ----------------------------------------------------------------------
# view
# ----------------------------------------------------------------------


def test_view_between_representations():
    reps = _HREPS
    for src in reps:
        for dst in reps:
            assert view(src.e, src, dst) == dst.e
            for k in (1, 2, 41, 42, 255, 256, 12345):
                assert view(src.from_int(k), src, dst) == dst.from_int(k)
    t42 = TREE.from_int(42)
    assert view(t42, TREE, BIGNAT) == 42


def test_view_round_trip(rep):
    for k in range(0, 3000, 7):
        x = rep.from_int(k)
        assert view(view(x, rep, BIGNAT), BIGNAT, rep) == x


# ----------------------------------------------------------------------
# digit-level special computations
# ----------------------------------------------------------------------


def _int_dual(k):
    # flip each bijective digit of k with plain int steps
    digits = []
    while k:
        digits.append(k % 2 == 1)
        k = (k - 1) // 2 if k % 2 else (k - 2) // 2
    v = 0
    for is_o in reversed(digits):
        v = 2 * v + 2 if is_o else 2 * v + 1
    return v


def test_dual(rep):
    assert rep.dual(rep.e) == rep.e
    assert rep.to_int(rep.dual(rep.from_int(1))) == 2
    for k in range(800):
        x = rep.from_int(k)
        d = rep.dual(x)
        assert rep.to_int(d) == _int_dual(k)
        assert rep.dual(d) == x
        assert rep.bitsize(d) == rep.bitsize(x)


def test_bitsize(rep):
    assert rep.bitsize(rep.e) == rep.e
    assert rep.to_int(rep.bitsize(rep.from_int(42))) == 5
    for k in range(1500):
        assert rep.to_int(rep.bitsize(rep.from_int(k))) == oracle_bitsize(k)
    for width in range(1, 21):
        assert rep.to_int(rep.bitsize(rep.from_int(2**width - 1))) == width


def test_repsize_defaults_to_bitsize():
    for rep_ in (BIGNAT, BIJ):
        for k in range(300):
            x = rep_.from_int(k)
            assert rep_.repsize(x) == rep_.bitsize(x)


def test_decons_cons_reference_points(rep):
    f = rep.from_int
    assert rep.decons(f(1)) == (rep.e, rep.e)
    assert rep.to_int(rep.cons(rep.e, rep.e)) == 1
    assert rep.decons(f(14)) == (f(5), rep.e)
    first, rest = rep.decons(f(4))
    assert (rep.to_int(first), rep.to_int(rest)) == (0, 1)


def test_decons_cons_round_trips(rep):
    f = rep.from_int
    for z in range(1, 600):
        x, y = rep.decons(f(z))
        assert rep.cons(x, y) == f(z)
    for x in range(32):
        for y in range(32):
            got = rep.decons(rep.cons(f(x), f(y)))
            assert got == (f(x), f(y))


def test_decons_zero_raises(rep):
    with pytest.raises(DomainError):
        rep.decons(rep.e)


TO_LIST_ALT_TABLE = [
    [], [0], [1], [2], [0, 0], [0, 1], [3], [4], [0, 2], [0, 0, 0], [1, 0],
    [1, 1], [0, 0, 1], [0, 3], [5], [6], [0, 4], [0, 0, 2], [1, 2], [1, 0, 0],
    [0, 0, 0, 0],
]


def test_to_list_alt_reference_table(rep):
    got = [[rep.to_int(v) for v in rep.to_list_alt(rep.from_int(k))] for k in range(21)]
    assert got == TO_LIST_ALT_TABLE


def test_from_list_alt_round_trip(rep):
    assert rep.to_list_alt(rep.e) == []
    assert rep.from_list_alt([]) == rep.e
    for k in range(1001):
        x = rep.from_int(k)
        assert rep.from_list_alt(rep.to_list_alt(x)) == x


def test_succ_depth_counts_trailing_i_digits(rep):
    # depth 1 on zero and on o-ending values, +1 per trailing i digit
    assert rep.succ_depth(rep.e) == 1
    assert rep.succ_depth(rep.from_int(1)) == 1
    assert rep.succ_depth(rep.from_int(2)) == 2
    assert rep.succ_depth(rep.from_int(2**10 - 2)) == 10
