"""Signed permutations, tau-symmetric partitions, parabolic cosets."""

import pytest

from iyang import (
    CosetSpace,
    MirrorViolation,
    NotASubgroup,
    NotInvariantUnderW1,
    ParabolicSubgroup,
    Poly,
    RatFunc,
    ShapeMismatch,
    ShiftOutOfRange,
    SymPartition,
    WeightVec,
    WeylElem,
    coset_reps,
    coset_sum,
    format_partition,
    is_invariant,
    parse_partition,
    substitute,
)
from iyang.symmetry import mirror_index, signed_value, val_slot


def x(d, k):
    return Poly.var(d, k)


def test_mirror_and_signed_values():
    d = 3
    assert [mirror_index(m, d) for m in range(1, 7)] == [6, 5, 4, 3, 2, 1]
    assert signed_value(d, 2) == x(d, 2)
    assert signed_value(d, 4) == -x(d, 3)
    assert val_slot(5, d) == (2, -1)
    assert val_slot(1, d) == (1, 1)


def test_weyl_action_orders():
    d = 2
    t = WeylElem.transposition(d, 1, 2)
    i1 = WeylElem.iota(d, 1)
    f = x(d, 1) * x(d, 2) ** 2
    assert t.act(f) == x(d, 1) ** 2 * x(d, 2)
    # product acts left factor last
    assert i1.mult(t).act(f) == x(d, 1) ** 2 * x(d, 2)
    assert t.mult(i1).act(f) == -(x(d, 1) ** 2 * x(d, 2))
    assert i1.mult(t).act(f) == i1.act(t.act(f))
    assert t.mult(i1).act(f) == t.act(i1.act(f))


def test_weyl_group_axioms():
    d = 3
    t12 = WeylElem.transposition(d, 1, 2)
    t23 = WeylElem.transposition(d, 2, 3)
    i2 = WeylElem.iota(d, 2)
    e = WeylElem.identity(d)
    assert t12.mult(t12) == e
    assert i2.mult(i2) == e
    for w in (t12, t23, i2, t12.mult(i2), i2.mult(t23)):
        assert w.mult(w.inverse()) == e
        assert w.inverse().mult(w) == e
    # braid relation for adjacent transpositions
    assert t12.mult(t23).mult(t12) == t23.mult(t12).mult(t23)


def test_partition_construction_and_format():
    I = parse_partition("{1,2}|{3,4}|{5,6}", 1, 3)
    assert I.shape() == (2, 2, 2)
    assert I.listing() == [1, 2, 3, 4, 5, 6]
    assert format_partition(I) == "{1,2}|{3,4}|{5,6}"
    assert I.block_of(4) == 2
    # round trip through text
    assert parse_partition(format_partition(I), 1, 3) == I


def test_partition_mirror_enforced():
    with pytest.raises(MirrorViolation):
        SymPartition(1, 2, ({1, 2}, {3}, {4}))
    # valid: asymmetric-looking but mirrored correctly
    I = SymPartition(1, 2, ({1}, {2, 3}, {4}))
    assert I.shape() == (1, 2, 1)


def test_standard_partition_of_weight():
    v = WeightVec(1, (1, 2, 1))
    I = SymPartition.standard(v)
    assert [sorted(b) for b in I.blocks] == [[1], [2, 3], [4]]
    assert I.listing() == [1, 2, 3, 4]


def test_tau_shift_moves_mirror_pair():
    I = parse_partition("{1,2}|{3,4}|{5,6}", 1, 3)
    J = I.tau_shift(1, +1)
    assert [sorted(b) for b in J.blocks] == [[2], [1, 3, 4, 6], [5]]
    assert J.listing() == [2, 1, 3, 4, 6, 5]
    # moving back restores the original
    assert J.tau_shift(1, -1) == I
    with pytest.raises(ShiftOutOfRange):
        I.tau_shift(5, +1)  # 5 sits in the last block
    with pytest.raises(ShiftOutOfRange):
        I.tau_shift(1, -1)  # 1 sits in the first block


def test_substitute_through_listing():
    # listing [2,1,3,4,6,5]: only the first d positions drive the slots
    I = parse_partition("{1,2}|{3,4}|{5,6}", 1, 3).tau_shift(1, +1)
    d = 3
    assert substitute(x(d, 1), I) == x(d, 2)
    assert substitute(x(d, 2), I) == x(d, 1)
    assert substitute(x(d, 3), I) == x(d, 3)
    assert substitute(x(d, 1) * x(d, 2) ** 2, I) == x(d, 2) * x(d, 1) ** 2


def test_substitute_with_sign():
    # listing [3,1,4,2] at d=2: slot 1 reads val(3) = -x2
    I = SymPartition(1, 2, ({3}, {1, 4}, {2}))
    assert I.listing() == [3, 1, 4, 2]
    d = 2
    assert substitute(x(d, 1), I) == -x(d, 2)
    assert substitute(x(d, 1) ** 2, I) == x(d, 2) ** 2
    assert substitute(x(d, 2), I) == x(d, 1)


def test_substitute_shape_checks():
    I = SymPartition.standard(WeightVec(1, (1, 2, 1)))  # d = 2
    with pytest.raises(ShapeMismatch):
        substitute(Poly.var(3, 1), I)  # slot count disagrees with d
    J = SymPartition.standard(WeightVec(1, (0, 2, 0)))
    with pytest.raises(ShapeMismatch):
        substitute(Poly.var(1, 1), J, shape=(1, 0, 1))
    # shape may be given as a WeightVec
    assert substitute(Poly.var(1, 1), J, shape=WeightVec(1, (0, 2, 0))) == Poly.var(1, 1)


def test_parabolic_orders():
    assert ParabolicSubgroup(2).order() == 1
    assert ParabolicSubgroup(2, sym_blocks=[(1, 2)]).order() == 2
    assert ParabolicSubgroup(2, hyp_block=(1, 2)).order() == 8
    assert ParabolicSubgroup(3, sym_blocks=[(1, 2)], hyp_block=(3, 3)).order() == 4
    W = ParabolicSubgroup(4, sym_blocks=[(1, 2), (3, 4)])
    assert W.order() == 4
    assert len(W.elements()) == 4


def test_parabolic_drops_trivial_blocks():
    W = ParabolicSubgroup(3, sym_blocks=[(1, 1), (2, 3)])
    assert W.sym_blocks == ((2, 3),)
    W2 = ParabolicSubgroup(3, hyp_block=(3, 2))
    assert W2.hyp_block is None


def test_membership_and_subgroups():
    d = 3
    W = ParabolicSubgroup(d, sym_blocks=[(1, 2)], hyp_block=(3, 3))
    assert W.contains(WeylElem.transposition(d, 1, 2))
    assert W.contains(WeylElem.iota(d, 3))
    assert not W.contains(WeylElem.transposition(d, 2, 3))
    assert not W.contains(WeylElem.iota(d, 1))
    triv = ParabolicSubgroup(d)
    assert triv.is_subgroup_of(W)
    assert ParabolicSubgroup(d, sym_blocks=[(1, 2)]).is_subgroup_of(W)
    assert not W.is_subgroup_of(ParabolicSubgroup(d, sym_blocks=[(1, 2)]))
    # a symmetric interval inside a hyperoctahedral block counts as contained
    assert ParabolicSubgroup(d, sym_blocks=[(3, 3)]).is_subgroup_of(W)


def test_coset_reps_counts():
    d = 2
    big = ParabolicSubgroup(d, hyp_block=(1, 2))
    small = ParabolicSubgroup(d, sym_blocks=[(1, 2)])
    reps = coset_reps(small, big)
    assert len(reps) == big.order() // small.order() == 4
    with pytest.raises(NotASubgroup):
        coset_reps(big, small)
    space = CosetSpace(small, big)
    assert len(space) == 4


def test_coset_sum_invariance():
    d = 2
    big = ParabolicSubgroup(d, hyp_block=(1, 2))
    small = ParabolicSubgroup(d, sym_blocks=[(1, 2)])
    space = CosetSpace(small, big)
    g = x(d, 1) * x(d, 2)  # symmetric; the sign flips cancel it out
    total = coset_sum(space, g)
    assert total.is_zero()
    with pytest.raises(NotInvariantUnderW1):
        coset_sum(space, x(d, 1))
    # summing a squared symmetric function picks up the full orbit
    g2 = x(d, 1) ** 2 + x(d, 2) ** 2
    assert coset_sum(space, g2) == RatFunc.from_poly(4 * g2)


def test_is_invariant():
    d = 2
    W = ParabolicSubgroup(d, hyp_block=(1, 2))
    assert is_invariant(x(d, 1) ** 2 + x(d, 2) ** 2, W)
    assert not is_invariant(x(d, 1) + x(d, 2), W)
    S2 = ParabolicSubgroup(d, sym_blocks=[(1, 2)])
    assert is_invariant(x(d, 1) + x(d, 2), S2)
