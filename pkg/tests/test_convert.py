import os
import random

import gmpy2
import pytest
from hypothesis import given, settings, strategies as st

from mixedradix.convert import (
    CapacityError,
    TABLE_CAP_ENV,
    build_table,
    column_height,
    conversion_stats,
    convert_radix,
)
from mixedradix.core import PreconditionError, psi


def int_from_digits(digits, b):
    n = 0
    for a in reversed(digits):
        n = n * b + a
    return n


def digits_from_int(n, b):
    out = []
    while n:
        n, a = divmod(n, b)
        out.append(a)
    return out or [0]


def test_known_instance_22012():
    assert convert_radix([2, 1, 0, 2, 2], 3, 5) == [1, 4, 3, 1]
    stats = conversion_stats()
    assert stats.divisions_in_inner_loop == 0
    assert stats.psi_applications == 13  # sum of the exact column heights
    assert stats.columns == 5


def test_table_contents():
    t = build_table(3, 5)
    assert t.lookup(1, 1) == psi(3, 5, 1, 1) == (4, 0)
    assert t.lookup(2, 4) == (4, 2)
    with pytest.raises(PreconditionError):
        build_table(1, 5)


def test_table_budget():
    with pytest.raises(CapacityError):
        build_table(100, 100, cap=50)
    os.environ[TABLE_CAP_ENV] = "10"
    try:
        with pytest.raises(CapacityError):
            build_table(7, 3)
    finally:
        del os.environ[TABLE_CAP_ENV]


def test_column_height_values():
    # smallest h with 5**h >= 3**(5-m)
    assert [column_height(5, m, 3, 5) for m in range(5)] == [4, 3, 3, 2, 1]
    with pytest.raises(PreconditionError):
        column_height(5, 5, 3, 5)


@given(st.integers(2, 12), st.integers(2, 12), st.integers(0, 10**9))
def test_matches_integer_oracle(p, q, n):
    digits = digits_from_int(n, p)
    out = convert_radix(digits, p, q)
    assert out == digits_from_int(n, q)
    assert conversion_stats().divisions_in_inner_loop == 0


@settings(max_examples=30)
@given(st.integers(2, 9), st.integers(2, 9), st.integers(0, 10**12))
def test_carry_mode_agrees(p, q, n):
    digits = digits_from_int(n, p)
    assert convert_radix(digits, p, q, mode="carry") == convert_radix(digits, p, q)


def test_engines_agree_and_count_identically():
    rng = random.Random(3)
    digits = [rng.randrange(3) for _ in range(700)]
    a = convert_radix(digits, 3, 5, engine="python")
    ops_py = conversion_stats().psi_applications
    b = convert_radix(digits, 3, 5, engine="numba")
    ops_nb = conversion_stats().psi_applications
    assert a == b
    assert ops_py == ops_nb
    n = int_from_digits(digits, 3)
    assert int_from_digits(a, 5) == n


def test_gmpy2_bignum_oracle():
    rng = random.Random(11)
    for p, q in ((2, 3), (3, 5), (10, 7), (16, 10)):
        for _ in range(20):
            n = rng.randrange(10**30)
            digits = [int(d, 36) for d in reversed(gmpy2.mpz(n).digits(p))]
            out = convert_radix(digits, p, q)
            want = [int(d, 36) for d in reversed(gmpy2.mpz(n).digits(q))]
            assert out == want


def test_canonical_stripping_and_padding():
    assert convert_radix([0, 0, 0], 3, 5) == [0]
    assert convert_radix([], 3, 5) == [0]
    assert convert_radix([1], 3, 5, pad_to=4) == [1, 0, 0, 0]
    with pytest.raises(PreconditionError):
        convert_radix([2, 2, 2, 2], 3, 5, pad_to=1)


def test_input_validation():
    with pytest.raises(PreconditionError):
        convert_radix([3], 3, 5)
    with pytest.raises(PreconditionError):
        convert_radix([1], 3, 5, mode="magic")
    with pytest.raises(PreconditionError):
        convert_radix([1], 3, 5, engine="gpu")


def test_slow_path_without_table():
    # p*q above the cap: falls back to per-cell psi with honest division counts
    os.environ[TABLE_CAP_ENV] = "10"
    try:
        out = convert_radix(digits_from_int(987654, 7), 7, 5)
        stats = conversion_stats()
        assert out == digits_from_int(987654, 5)
        assert stats.divisions_in_inner_loop == stats.psi_applications > 0
    finally:
        del os.environ[TABLE_CAP_ENV]


def test_stats_require_a_run(monkeypatch):
    import threading

    result = {}

    def probe():
        try:
            conversion_stats()
        except PreconditionError:
            result["raised"] = True

    t = threading.Thread(target=probe)
    t.start()
    t.join()
    assert result.get("raised")
