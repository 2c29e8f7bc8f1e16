from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mixedradix.core import MixedRadixBasis, PreconditionError, decompose, recompose
from mixedradix.yangbaxter import (
    BudgetError,
    TaggedTuple,
    braid_transform_consistency,
    hypercube_consistency,
    iota_apply,
    iota_apply_psi,
    yb_check_phi,
    yb_check_psi,
    _yb_routes_psi,
)


def test_tagged_tuple_validation():
    TaggedTuple((1, 2), (3, 5))
    with pytest.raises(PreconditionError):
        TaggedTuple((3, 0), (3, 5))
    with pytest.raises(PreconditionError):
        TaggedTuple((0,), (3, 5))


def test_iota_apply_psi_swaps_slot_sizes():
    t = TaggedTuple((1, 1, 0), (3, 5, 2))
    t2 = iota_apply_psi(1, t)
    assert t2.sizes == (5, 3, 2)
    assert t2.values == (4, 0, 0)  # 1 + 3*1 = 4 + 5*0
    with pytest.raises(PreconditionError):
        iota_apply_psi(3, t)


def test_iota_apply_generic():
    swap = lambda a, b: (b, a)
    assert iota_apply(swap, 2, (1, 2, 3)) == (1, 3, 2)
    with pytest.raises(PreconditionError):
        iota_apply(swap, 0, (1, 2))


@given(st.integers(2, 8), st.integers(2, 8), st.integers(2, 8))
def test_yb_psi_holds(p1, p2, p3):
    rep = yb_check_psi(p1, p2, p3)
    assert rep.holds
    assert rep.checked == p1 * p2 * p3


def test_yb_psi_matches_tagged_reference():
    for a in range(3):
        for b in range(4):
            for c in range(7):
                lhs, rhs = _yb_routes_psi(3, 4, 7, (a, b, c))
                assert lhs.values == rhs.values
                assert lhs.sizes == rhs.sizes == (7, 4, 3)


def test_yb_psi_routes_give_reversed_basis_digits():
    # both routes must land on the decomposition in the reversed basis
    p1, p2, p3 = 3, 4, 7
    for n in range(p1 * p2 * p3):
        d = decompose(n, MixedRadixBasis((p1, p2, p3)))
        lhs, _ = _yb_routes_psi(p1, p2, p3, d.digits)
        expect = decompose(n, MixedRadixBasis((p3, p2, p1)))
        assert lhs.values == expect.digits


def test_yb_psi_budget_and_validation():
    with pytest.raises(BudgetError):
        yb_check_psi(100, 100, 100)
    with pytest.raises(PreconditionError):
        yb_check_psi(1, 2, 3)


@settings(max_examples=30)
@given(
    st.fractions(min_value=-9, max_value=9, max_denominator=7),
    st.fractions(min_value=-9, max_value=9, max_denominator=7),
    st.fractions(min_value=-9, max_value=9, max_denominator=7),
)
def test_yb_phi_holds(a1, a2, a3):
    rep = yb_check_phi(a1, a2, a3, samples=20, seed=1)
    assert rep.holds


def test_yb_phi_known_nodes():
    assert yb_check_phi(0, 1, 2).holds
    assert yb_check_phi(Fraction(1, 2), Fraction(-2, 3), 5).holds


def test_braid_transform_consistency_58():
    rep = braid_transform_consistency(58, (3, 4, 7))
    assert rep.holds
    assert braid_transform_consistency(0, (2, 2, 2)).holds


def test_hypercube_exhaustive_221():
    rep = hypercube_consistency(221, (3, 5), (5, 4))
    assert rep.holds
    assert rep.checked == 126  # C(9, 4) words


def test_hypercube_three_radices():
    rep = hypercube_consistency(59, (2, 3, 5), (2, 1, 1))
    assert rep.holds
    assert rep.checked == 12


def test_hypercube_sampling_over_budget():
    rep = hypercube_consistency(
        12345, (2, 3), (10, 5), budget=10, sample=25, seed=4
    )
    assert rep.holds
    assert rep.checked == 25


def test_hypercube_validation():
    with pytest.raises(PreconditionError):
        hypercube_consistency(100, (2, 3), (1,))
    with pytest.raises(PreconditionError):
        hypercube_consistency(2**3 * 3**2, (2, 3), (3, 2))
