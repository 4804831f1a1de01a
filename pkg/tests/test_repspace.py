"""Module elements over weight components and invariant bases."""

import pytest
from fractions import Fraction

from iyang import (
    GaussRat,
    InvarianceViolation,
    ModuleElem,
    PElem,
    Poly,
    ShapeMismatch,
    WeightVec,
    basis_elements,
    format_poly,
    orbit_sum_basis,
    parabolic_of_weight,
)


V121 = WeightVec(1, (1, 2, 1))
V020 = WeightVec(1, (0, 2, 0))


def x(d, k):
    return Poly.var(d, k)


def test_module_elem_checks_invariance():
    # on (1,2,1) the component group is hyperoctahedral on slot 2
    ok = ModuleElem(V121, x(2, 1))
    assert ok.weight == V121
    with pytest.raises(InvarianceViolation):
        ModuleElem(V121, x(2, 2))
    assert ModuleElem(V121, x(2, 2) ** 2, check=True).poly == x(2, 2) ** 2


def test_module_elem_shape_check():
    with pytest.raises(ShapeMismatch):
        ModuleElem(V121, Poly.var(3, 1))


def test_orbit_sum_basis_frozen():
    names = [format_poly(p) for p in orbit_sum_basis(V121, 2)]
    assert names == ["1", "x1", "x2^2", "x1^2"]
    # basis elements are invariant and have leading coefficient one
    W = parabolic_of_weight(V121)
    for p in orbit_sum_basis(V121, 2):
        assert p.leading_coeff() == GaussRat(1)
    assert [format_poly(p) for p in orbit_sum_basis(V020, 2)] == ["1", "x1^2"]


def test_orbit_sum_basis_symmetric_block():
    v = WeightVec(1, (2, 0, 2))
    names = [format_poly(p) for p in orbit_sum_basis(v, 2)]
    assert names[0] == "1"
    assert "x1 + x2" in names
    # full degree coverage: each degree <= D contributes at least one element
    degs = {p.total_degree() for p in orbit_sum_basis(v, 3)}
    assert degs == {0, 1, 2, 3}


def test_basis_elements_wrap():
    elems = basis_elements(V121, 2)
    assert all(isinstance(e, PElem) for e in elems)
    assert all(e.weights() == [V121] for e in elems)


def test_pelem_algebra():
    e = PElem.from_component(V121, Poly.one(2))
    f = PElem.from_component(V121, x(2, 1))
    assert (e + f) - f == e
    assert (e - e).is_zero()
    assert not e.is_zero()
    assert (-e) + e == PElem.zero(1, 2)
    g = e.scale(3) - e - e - e
    assert g.is_zero()
    assert e.scale(Fraction(1, 2)) + e.scale(Fraction(1, 2)) == e
    assert e.scale(GaussRat(0, 1)).scale(GaussRat(0, -1)) == e


def test_pelem_multi_component():
    e = PElem.from_component(V121, Poly.one(2))
    f = PElem.from_component(WeightVec(1, (2, 0, 2)), x(2, 1) + x(2, 2))
    s = e + f
    assert len(s.components()) == 2
    assert sorted(w.entries for w in s.weights()) == [(1, 2, 1), (2, 0, 2)]
    assert s.get(V121) == Poly.one(2)
    assert s.get(V020).is_zero()
    # adding the negation of one component drops it
    t = s - f
    assert t.weights() == [V121]


def test_pelem_hbar():
    e = PElem.from_component(V121, x(2, 1))
    assert e.mul_hbar(2).get(V121) == x(2, 1) * Poly.hbar(2) ** 2


def test_pelem_zero_components_dropped():
    z = PElem(1, 2, {V121: Poly.zero(2)})
    assert z.is_zero()
    assert z == PElem.zero(1, 2)


def test_pelem_hash_eq():
    e1 = PElem.from_component(V121, x(2, 1))
    e2 = PElem.from_component(V121, x(2, 1))
    assert e1 == e2 and hash(e1) == hash(e2)
    assert len({e1, e2}) == 1
    assert e1 != PElem.from_component(V121, x(2, 1) ** 2)


def test_pelem_shape_mismatch():
    e = PElem.from_component(V121, Poly.one(2))
    f = PElem.from_component(WeightVec(1, (0, 2, 0)), Poly.one(1))
    with pytest.raises(ShapeMismatch):
        e + f
