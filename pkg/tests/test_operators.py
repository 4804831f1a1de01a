"""The H and B operator families on the weight-graded polynomial module."""

import pytest
from fractions import Fraction

from iyang import (
    GaussRat,
    MUTATIONS,
    NotAConstant,
    ParameterMismatch,
    PElem,
    Poly,
    RepContext,
    WeightVec,
    lemma26_constant,
    lemma53_det,
)
from iyang.operators import lemma53_matrix

IMAG = GaussRat(0, 1)


@pytest.fixture(scope="module")
def ctx11():
    return RepContext(1, 1)


@pytest.fixture(scope="module")
def ctx12():
    return RepContext(1, 2)


@pytest.fixture(scope="module")
def ctx22():
    return RepContext(2, 2)


def unit(ctx, entries, poly=None):
    v = WeightVec(ctx.n, entries)
    return PElem.from_component(v, poly if poly is not None else Poly.one(ctx.d))


def test_index_helpers(ctx22):
    assert [ctx22.tau(i) for i in range(1, 5)] == [4, 3, 2, 1]
    assert ctx22.cartan(1, 1) == 2
    assert ctx22.cartan(1, 2) == -1
    assert ctx22.cartan(1, 3) == 0
    assert ctx22.delta(2) == 1 and ctx22.delta(3) == -1 and ctx22.delta(1) == 0
    with pytest.raises(ParameterMismatch):
        ctx22.cartan(0, 1)
    with pytest.raises(ParameterMismatch):
        ctx22.cartan(1, 5)


def test_shift_constants_antisymmetric(ctx22):
    h = Poly.hbar(2)
    assert ctx22.shift_const(1) == h.scale(Fraction(3, 4))
    assert ctx22.shift_const(2) == h.scale(Fraction(1, 4))
    assert ctx22.shift_const(3) == h.scale(Fraction(-1, 4))
    assert ctx22.shift_const(4) == h.scale(Fraction(-3, 4))
    for i in range(1, 5):
        assert ctx22.shift_const(ctx22.tau(i)) == -ctx22.shift_const(i)


def test_h0_eigenvalues_frozen(ctx11):
    v101 = WeightVec(1, (1, 0, 1))
    v020 = WeightVec(1, (0, 2, 0))
    assert ctx11.h0_eigenvalue(1, v101) == Fraction(3, 4)
    assert ctx11.h0_eigenvalue(1, v020) == Fraction(-9, 4)
    # tau partner negates the order-zero eigenvalue
    assert ctx11.h0_eigenvalue(2, v101) == Fraction(-3, 4)


def test_apply_h_is_diagonal(ctx12):
    for v in ctx12.weights():
        for e in ctx12.basis(v, 2):
            out = ctx12.apply_H(1, 0, e)
            assert out == e.scale(Fraction(ctx12.h0_eigenvalue(1, v)))


def test_apply_h_r_keeps_component(ctx12):
    v = WeightVec(1, (1, 2, 1))
    e = unit(ctx12, (1, 2, 1), Poly.var(2, 1))
    for r in range(4):
        out = ctx12.apply_H(1, r, e)
        assert out.is_zero() or out.weights() == [v]


def test_h_parity(ctx12):
    for v in ctx12.weights():
        a = ctx12.h_coeffs(1, v, 5)
        b = ctx12.h_coeffs(2, v, 5)
        for r in range(5):
            assert b[r] == a[r].scale(GaussRat((-1) ** (r + 1)))


def test_b_hand_checks_d1(ctx11):
    e020 = unit(ctx11, (0, 2, 0))
    out = ctx11.apply_B(1, 0, e020)
    assert out == unit(ctx11, (1, 0, 1)).scale(IMAG)
    e101 = unit(ctx11, (1, 0, 1))
    out2 = ctx11.apply_B(2, 0, e101)
    assert out2 == unit(ctx11, (0, 2, 0)).scale(IMAG * 2)
    out3 = ctx11.apply_B(2, 0, unit(ctx11, (1, 0, 1), Poly.var(1, 1)))
    assert out3 == unit(ctx11, (0, 2, 0), Poly.hbar(1)).scale(IMAG)


def test_b_hand_check_d2(ctx12):
    out = ctx12.apply_B(1, 0, unit(ctx12, (1, 2, 1)))
    assert out == unit(ctx12, (2, 0, 2)).scale(IMAG * 2)


def test_b_target_moves(ctx22):
    w = WeightVec(2, (0, 1, 2, 1, 0))
    # i = 1: +e1 -e2 -e4 +e5
    assert ctx22.b_target(1, w) == WeightVec(2, (1, 0, 2, 0, 1))
    # i = n = 2: +e2 -2e3 +e4
    assert ctx22.b_target(2, w) == WeightVec(2, (0, 2, 0, 2, 0))
    # i = n + 1 = 3: -e2 +2e3 -e4
    assert ctx22.b_target(3, w) == WeightVec(2, (0, 0, 4, 0, 0))
    # invalid move gives None
    assert ctx22.b_target(1, WeightVec(2, (2, 0, 0, 0, 2))) is None


def test_b_invalid_target_is_zero(ctx11):
    out = ctx11.apply_B(1, 0, unit(ctx11, (1, 0, 1)))
    assert out.is_zero()


def test_b_series_matches_direct(ctx12):
    e = unit(ctx12, (1, 2, 1), Poly.var(2, 1))
    series = ctx12.apply_B_series(1, e, 3)
    for r in range(3):
        assert series[r] == ctx12.apply_B(1, r, e)


def test_b_pushforward_matches_direct(ctx12):
    for v in ctx12.weights():
        for e in ctx12.basis(v, 2):
            for i in (1, 2):
                for r in (0, 1):
                    direct = ctx12.apply_B(i, r, e)
                    assert ctx12.apply_B_pushforward(i, r, e) == direct


def test_b_pushforward_range(ctx22):
    e = unit(ctx22, (0, 0, 4, 0, 0))
    with pytest.raises(ParameterMismatch):
        ctx22.apply_B_pushforward(4, 0, e)


def test_operator_index_range(ctx11):
    e = unit(ctx11, (0, 2, 0))
    with pytest.raises(ParameterMismatch):
        ctx11.apply_H(3, 0, e)
    with pytest.raises(ParameterMismatch):
        ctx11.apply_B(0, 0, e)


def test_hhat_top_parts(ctx12):
    v = WeightVec(1, (1, 2, 1))
    for k in (1, 2, 3):
        got = ctx12.hhat(1, k, v)
        top = got.x_homogeneous_part(k)
        assert top == ctx12.hhat_top_expected(1, k, v)
    with pytest.raises(ParameterMismatch):
        ctx12.hhat_top_expected(2, 1, v)


def test_hhat_frozen_example(ctx12):
    v = WeightVec(1, (1, 2, 1))
    x1, x2 = Poly.var(2, 1), Poly.var(2, 2)
    assert ctx12.hhat_top_expected(1, 2, v) == -x1 ** 2 + 2 * x2 ** 2


def test_halving_and_negative_parts(ctx12):
    for v in ctx12.weights():
        for i in (1, 2):
            assert ctx12.check_halving(i, v, 5)
            assert ctx12.check_negative_part(i, v, 5)


def test_idempotent_selectivity(ctx11):
    weights = ctx11.weights()
    for v in weights:
        for w in weights:
            for e in ctx11.basis(w, 2):
                out = ctx11.idempotent(v, e)
                if v == w:
                    assert out == e
                else:
                    assert out.is_zero()


def test_lemma26_values():
    assert [lemma26_constant(a, a + 1) for a in range(4)] == [
        GaussRat(1),
        GaussRat(-2),
        GaussRat(3),
        GaussRat(-4),
    ]
    # independent of the ambient size and offset
    assert lemma26_constant(1, 3, offset=1) == GaussRat(-2)
    assert lemma26_constant(0, 4, offset=2) == GaussRat(1)
    with pytest.raises(ValueError):
        lemma26_constant(2, 2)


def test_lemma53_determinants():
    assert [lemma53_det(n) for n in range(1, 5)] == [-3, 5, -7, 9]
    m = lemma53_matrix(2)
    assert m == [
        [-1, 1, 0],
        [0, -1, 2],
        [1, 1, 1],
    ]


def test_mutations_registry():
    assert MUTATIONS == (
        "b-drop-imaginary-unit",
        "b-flip-quarter-shift",
        "h-flip-prefactor-sign",
    )
    ctx = RepContext(1, 1, mutation="b-drop-imaginary-unit")
    out = ctx.apply_B(1, 0, unit(ctx, (0, 2, 0)))
    assert out == unit(ctx, (1, 0, 1))  # no imaginary unit in front
    with pytest.raises(ValueError):
        RepContext(1, 1, mutation="no-such-mutation")


def test_not_a_constant_is_reported():
    from iyang import IyangError

    assert issubclass(NotAConstant, IyangError)
