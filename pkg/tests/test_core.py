import pytest
from hypothesis import given, strategies as st

from mixedradix.core import (
    DigitString,
    MixedRadixBasis,
    OverflowBasisError,
    PreconditionError,
    TranspositionStep,
    UnsupportedPairError,
    apply_permutation,
    decompose,
    psi,
    psi_inverse,
    psi_ne,
    recompose,
    transpose_digits,
)

radix = st.integers(min_value=2, max_value=50)


def test_psi_small_values():
    # 1 + 3*1 = 4 = 4 + 5*0
    assert psi(3, 5, 1, 1) == (4, 0)
    assert psi(3, 5, 0, 0) == (0, 0)
    assert psi(3, 5, 2, 4) == (4, 2)  # 2 + 12 = 14 = 4 + 5*2


@given(radix, radix, st.data())
def test_psi_preserves_value_and_inverts(p, q, data):
    u = data.draw(st.integers(0, p - 1))
    v = data.draw(st.integers(0, q - 1))
    v2, u2 = psi(p, q, u, v)
    assert 0 <= v2 < q and 0 <= u2 < p
    assert u + p * v == v2 + q * u2
    assert psi_inverse(p, q, v2, u2) == (u, v)


@given(radix, radix)
def test_psi_is_a_bijection(p, q):
    images = {psi(p, q, u, v) for u in range(p) for v in range(q)}
    assert len(images) == p * q


def test_psi_rejects_bad_arguments():
    with pytest.raises(PreconditionError):
        psi(1, 5, 0, 0)
    with pytest.raises(PreconditionError):
        psi(3, 5, 3, 0)
    with pytest.raises(PreconditionError):
        psi(3, 5, 0, -1)


@given(st.data())
def test_psi_ne_solves_both_congruences(data):
    p = data.draw(st.integers(2, 30))
    q = data.draw(st.integers(2, 30).filter(lambda q: __import__("math").gcd(p, q) == 1))
    u_w = data.draw(st.integers(0, q - 1))
    u_s = data.draw(st.integers(0, p - 1))
    u_n, u_e = psi_ne(p, q, u_w, u_s)
    n = u_w + q * u_n
    assert n == u_s + p * u_e
    assert 0 <= n < p * q


def test_psi_ne_needs_coprime_radices():
    with pytest.raises(UnsupportedPairError):
        psi_ne(4, 6, 0, 0)


def test_basis_products_and_capacity():
    b = MixedRadixBasis((3, 3, 5))
    assert b.products == (1, 3, 9, 45)
    assert b.capacity == 45
    assert len(b) == 3


def test_basis_rejects_small_radix():
    with pytest.raises(PreconditionError):
        MixedRadixBasis((3, 1))


def test_decompose_known_values():
    assert decompose(58, MixedRadixBasis((7, 4, 3))).digits == (2, 0, 2)
    assert decompose(58, MixedRadixBasis((3, 4, 7))).digits == (1, 3, 4)
    assert decompose(0, MixedRadixBasis((3, 3, 5))).digits == (0, 0, 0)


def test_decompose_overflow():
    with pytest.raises(OverflowBasisError):
        decompose(45, MixedRadixBasis((3, 3, 5)))
    with pytest.raises(PreconditionError):
        decompose(-1, MixedRadixBasis((3, 3, 5)))


@given(st.lists(radix, min_size=1, max_size=8), st.data())
def test_decompose_recompose_roundtrip(radices, data):
    basis = MixedRadixBasis(radices)
    n = data.draw(st.integers(0, basis.capacity - 1))
    d = decompose(n, basis)
    assert recompose(d) == n
    assert all(0 <= a < b for a, b in zip(d.digits, radices))


@given(st.lists(radix, min_size=2, max_size=8), st.data())
def test_transpose_preserves_value(radices, data):
    basis = MixedRadixBasis(radices)
    n = data.draw(st.integers(0, basis.capacity - 1))
    k = data.draw(st.integers(1, len(radices) - 1))
    d = decompose(n, basis)
    d2 = transpose_digits(d, k)
    assert d2.basis.radices == basis.transposed(k).radices
    assert recompose(d2) == n
    # only the two local digits may change
    for i in range(len(radices)):
        if i not in (k - 1, k):
            assert d2.digits[i] == d.digits[i]
    # involution
    assert transpose_digits(d2, k).digits == d.digits


def test_apply_permutation_reports_bad_step():
    d = decompose(5, MixedRadixBasis((3, 4)))
    with pytest.raises(PreconditionError, match="step 1"):
        apply_permutation(d, [1, 7])


def test_transposition_step_validation():
    with pytest.raises(PreconditionError):
        TranspositionStep(0)
    step = TranspositionStep(2)
    d = decompose(30, MixedRadixBasis((3, 4, 5)))
    assert recompose(apply_permutation(d, [step])) == 30


def test_digit_string_validation_and_json():
    basis = MixedRadixBasis((3, 4))
    with pytest.raises(PreconditionError):
        DigitString(basis, (3, 0))
    with pytest.raises(PreconditionError):
        DigitString(basis, (0,))
    d = DigitString(basis, (2, 3))
    assert DigitString.from_json(d.to_json()) == d


def test_human_rendering_is_big_endian():
    d = decompose(58, MixedRadixBasis((3, 4, 7)))
    assert d.human() == "4:3:1 (basis 3,4,7)"
